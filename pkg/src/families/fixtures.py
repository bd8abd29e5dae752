"""Packaged graph fixtures with sidecar invariants checked at load time."""

from pathlib import Path
from typing import Dict, List, Optional

import structlog
from pydantic import BaseModel, Field

from ..classify import IntersectionArray, classify_drg
from ..cli.formats import parse_edge_list, parse_graph6
from ..graphs import Graph, compute_distance_data, is_regular

logger = structlog.get_logger(__name__)

DATA_DIR = Path(__file__).parent / "data"
GRAPH_SUFFIXES = (".g6", ".edges")


class FixtureError(ValueError):
    """Missing fixture, unreadable sidecar or invariant mismatch."""


class FixtureProperties(BaseModel):
    """Expected invariants stored next to a fixture."""

    name: str
    n: int = Field(..., ge=1)
    m: int = Field(..., ge=0)
    degree: Optional[int] = None
    diameter: Optional[int] = None
    intersection_array: Optional[str] = Field(None, description="Vertex array as {b..;c..}")


def _read_properties(path: Path) -> FixtureProperties:
    values: Dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise FixtureError(f"{path.name}:{lineno}: expected 'key = value'")
        values[key.strip()] = value.strip()
    try:
        return FixtureProperties(**values)
    except ValueError as e:
        raise FixtureError(f"{path.name}: {e}") from None


def list_fixtures(directory: Optional[Path] = None) -> List[str]:
    directory = directory or DATA_DIR
    return sorted(p.stem for p in directory.iterdir() if p.suffix in GRAPH_SUFFIXES)


def _check(name: str, field: str, expected: object, actual: object) -> None:
    if expected is not None and expected != actual:
        raise FixtureError(f"Fixture {name!r}: {field} is {actual}, sidecar says {expected}")


def load_fixture(name: str, directory: Optional[Path] = None) -> Graph:
    """Load ``name.g6`` or ``name.edges`` and validate it against ``name.properties``."""
    directory = directory or DATA_DIR
    graph_path = next((directory / f"{name}{s}" for s in GRAPH_SUFFIXES if (directory / f"{name}{s}").exists()), None)
    if graph_path is None:
        raise FixtureError(f"No fixture named {name!r} in {directory}")
    sidecar = directory / f"{name}.properties"
    if not sidecar.exists():
        raise FixtureError(f"Fixture {name!r} has no sidecar {sidecar.name}")

    text = graph_path.read_text(encoding="utf-8")
    g = parse_graph6(text) if graph_path.suffix == ".g6" else parse_edge_list(text)
    props = _read_properties(sidecar)

    _check(name, "n", props.n, g.n)
    _check(name, "m", props.m, g.m)
    _check(name, "degree", props.degree, is_regular(g))
    if props.diameter is not None or props.intersection_array is not None:
        dd = compute_distance_data(g)
        _check(name, "diameter", props.diameter, dd.diameter)
        if props.intersection_array is not None:
            expected = IntersectionArray.parse(props.intersection_array)
            actual = classify_drg(g, dd)
            _check(name, "intersection array", expected.to_text(), actual.to_text() if actual else None)

    logger.info("Fixture loaded", fixture=name, path=str(graph_path), n=g.n, m=g.m)
    return g
