"""Tests for local counts, pair and edge partitions, equitability and proof facts."""

import pytest
from pydantic import ValidationError

from src.families import complete, cycle, hypercube, kneser, odd_graph, path
from src.graphs import compute_distance_data
from src.partitions import (
    PairPartition,
    PartitionError,
    ProofFact,
    edge_local_counts,
    edge_partition,
    is_equitable,
    local_counts,
    pair_partition,
    proof_fact_oracles,
)
from src.verification import proof_fact_records


class TestLocalCounts:
    """Test c, a, b counts of one vertex relative to another."""

    def test_cube_antipode(self):
        """Test the vertex opposite the base in Q3."""
        g = hypercube(3)
        lc = local_counts(g, compute_distance_data(g), 7, 0)
        assert lc.i == 3
        assert lc.as_tuple() == (3, 0, 0)

    def test_base_vertex(self):
        """Test w = u sees all neighbours one step further."""
        g = kneser(5, 2)
        lc = local_counts(g, compute_distance_data(g), 4, 4)
        assert (lc.i, lc.c, lc.a, lc.b) == (0, 0, 0, 3)
        assert lc.total == 3


class TestPairPartition:
    """Test the joint distance partition of an adjacent pair."""

    def test_cube_cells(self):
        """Test V_{i,j} for edge 01 of Q3."""
        g = hypercube(3)
        pp = pair_partition(g, compute_distance_data(g), 0, 1)
        assert pp.sizes() == {(0, 1): 1, (1, 0): 1, (1, 2): 2, (2, 1): 2, (2, 3): 1, (3, 2): 1}
        assert pp.cell(1, 2) == frozenset({2, 4})
        assert pp.is_empty(1, 1)

    def test_triangle_cell(self):
        """Test common neighbours land in V_{1,1}."""
        g = complete(4)
        pp = pair_partition(g, compute_distance_data(g), 0, 1)
        assert pp.cell(1, 1) == frozenset({2, 3})

    def test_non_adjacent_pair_rejected(self):
        """Test non-adjacent base vertices."""
        g = cycle(6)
        with pytest.raises(PartitionError):
            pair_partition(g, compute_distance_data(g), 0, 2)

    def test_impossible_cell_rejected(self):
        """Test the model refuses cells with |i - j| > 1."""
        with pytest.raises(ValidationError):
            PairPartition(u=0, v=1, cells={(0, 2): frozenset({3})})


class TestEdgePartition:
    """Test edge layers and edge-local counts."""

    def test_cube_layers(self):
        """Test layers of edge 01 of Q3."""
        g = hypercube(3)
        ep = edge_partition(g, compute_distance_data(g), 0, 1)
        assert ep.layers == (frozenset({0, 1}), frozenset({2, 3, 4, 5}), frozenset({6, 7}))
        assert ep.eccentricity == 2
        assert ep.layer_of(5) == 1
        assert ep.layer_of(9) is None

    def test_edge_local_counts(self):
        """Test counts in the top layer of Q3."""
        g = hypercube(3)
        lc = edge_local_counts(g, compute_distance_data(g), 0, 1, 6)
        assert (lc.i, lc.c, lc.a, lc.b) == (2, 2, 1, 0)

    def test_end_vertex_counts(self):
        """Test the layer-0 counts at an end of the edge."""
        g = kneser(5, 2)
        u, v = g.edges[0]
        lc = edge_local_counts(g, compute_distance_data(g), u, v, u)
        assert lc.as_tuple() == (0, 1, 2)

    def test_non_adjacent_pair_rejected(self):
        """Test non-adjacent endpoints."""
        g = path(3)
        with pytest.raises(PartitionError):
            edge_partition(g, compute_distance_data(g), 0, 2)


class TestEquitable:
    """Test equitable partition detection."""

    def test_equitable_quotient(self):
        """Test the bipartition of C4."""
        assert is_equitable(cycle(4), [{0, 2}, {1, 3}]) == [[0, 2], [2, 0]]

    def test_not_equitable(self):
        """Test a partition whose cell has unequal degrees."""
        assert is_equitable(path(3), [{0, 1, 2}]) is None

    def test_overlapping_cells_rejected(self):
        """Test a vertex in two cells."""
        with pytest.raises(PartitionError):
            is_equitable(cycle(4), [{0, 1, 2}, {2, 3}])

    def test_missing_vertex_rejected(self):
        """Test cells that miss a vertex."""
        with pytest.raises(PartitionError):
            is_equitable(cycle(4), [{0, 1}, {2}])


class TestProofFacts:
    """Test the pointwise neighbour-count identities."""

    def test_no_records_for_base_vertex(self):
        """Test w = u has no applicable identity."""
        g = hypercube(3)
        assert proof_fact_oracles(g, compute_distance_data(g), 0, 1, 0) == []

    def test_cell_selects_identity(self):
        """Test which identity applies to each cell of Q3."""
        g = hypercube(3)
        dd = compute_distance_data(g)
        facts = {w: [r.fact for r in proof_fact_oracles(g, dd, 0, 1, w, frozenset({0, 1, 2, 3}))] for w in range(1, 8)}
        assert facts[1] == [ProofFact.FORWARD]
        assert facts[2] == [ProofFact.BACKWARD, ProofFact.BACKWARD_LEVEL]
        assert facts[7] == [ProofFact.FORWARD]

    def test_diagonal_cell(self):
        """Test V_{2,2} of the Petersen graph uses the diagonal identity."""
        g = kneser(5, 2)
        dd = compute_distance_data(g)
        u, v = g.edges[0]
        w = next(x for x in range(g.n) if dd.distance(x, u) == 2 and dd.distance(x, v) == 2)
        (record,) = proof_fact_oracles(g, dd, u, v, w)
        assert record.fact == ProofFact.DIAGONAL
        assert record.holds

    def test_level_identity_skipped_without_zero_a(self):
        """Test BACKWARD_LEVEL is reported as skipped when a_i is unknown."""
        g = hypercube(3)
        records = proof_fact_oracles(g, compute_distance_data(g), 0, 1, 2)
        level = [r for r in records if r.fact == ProofFact.BACKWARD_LEVEL]
        assert len(level) == 1
        assert level[0].skipped is not None
        assert level[0].holds

    def test_non_adjacent_pair_rejected(self):
        """Test non-adjacent base vertices."""
        g = cycle(6)
        with pytest.raises(PartitionError):
            proof_fact_oracles(g, compute_distance_data(g), 0, 3, 1)

    @pytest.mark.slow
    def test_identities_balance_on_edge_regular_graphs(self):
        """Test every identity on Q3, O4, C5 and Petersen, counting compared values."""
        compared = 0
        for g, zero_a in (
            (hypercube(3), frozenset({0, 1, 2, 3})),
            (odd_graph(4), frozenset({0, 1, 2})),
            (cycle(5), frozenset({0, 1})),
            (kneser(5, 2), frozenset({0, 1})),
        ):
            records = proof_fact_records(g, compute_distance_data(g), zero_a)
            for r in records:
                assert r.holds, r
                if r.skipped is None:
                    compared += 2
        assert compared >= 10_000
