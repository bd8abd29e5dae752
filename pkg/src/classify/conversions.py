"""Translation between vertex and edge intersection arrays."""

from typing import Optional

from .models import EdgeIntersectionArray, IntersectionArray


def edge_array_from_vertex_array(
    arr: IntersectionArray, bipartite: bool
) -> Optional[EdgeIntersectionArray]:
    """Edge array of a bipartite or generalized odd distance-regular graph.

    bipartite:        {b_1..b_{d-1}; c_1..c_{d-1}}
    generalized odd:  {b_1..b_{d-1}, a_d; c_1..c_{d-1}, 2c_d}

    Returns None for any other array.
    """
    d = arr.diameter
    inner_b = arr.b[1:d]
    inner_c = arr.c[: d - 1]
    if bipartite:
        return EdgeIntersectionArray(degree=arr.degree, b=inner_b, c=inner_c)
    a = arr.a
    if d >= 1 and all(x == 0 for x in a[:d]) and a[d] != 0:
        return EdgeIntersectionArray(
            degree=arr.degree,
            b=inner_b + (a[d],),
            c=inner_c + (2 * arr.c_at(d),),
        )
    return None


def vertex_array_from_edge_array(
    earr: EdgeIntersectionArray, bipartite: bool
) -> IntersectionArray:
    """Inverse of :func:`edge_array_from_vertex_array`."""
    delta = earr.degree
    k = earr.edge_diameter
    if bipartite:
        return IntersectionArray(
            degree=delta,
            b=(delta,) + earr.b,
            c=earr.c + (delta,),
        )
    if k == 0 or earr.c[-1] % 2:
        raise ValueError(f"{earr.to_text()} is not the edge array of a generalized odd graph")
    return IntersectionArray(
        degree=delta,
        b=(delta,) + earr.b[:-1],
        c=earr.c[:-1] + (earr.c[-1] // 2,),
    )
