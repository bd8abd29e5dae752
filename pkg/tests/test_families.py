"""Tests for family generators and packaged fixtures."""

import networkx as nx
import pytest

from src.cli.formats import encode_edge_list, encode_graph6
from src.families import (
    DATA_DIR,
    FAMILIES,
    FamilyError,
    FamilySpec,
    FixtureError,
    complete,
    complete_bipartite,
    cycle,
    generate,
    hamming,
    hypercube,
    kneser,
    list_fixtures,
    load_fixture,
    odd_graph,
    path,
)
from src.graphs import Graph, compute_distance_data, is_regular


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class TestGenerators:
    """Test constructions against networkx and known counts."""

    @pytest.mark.parametrize(
        "g,reference",
        [
            (complete(5), nx.complete_graph(5)),
            (cycle(7), nx.cycle_graph(7)),
            (path(4), nx.path_graph(4)),
            (complete_bipartite(2, 3), nx.complete_bipartite_graph(2, 3)),
            (hypercube(4), nx.hypercube_graph(4)),
            (kneser(5, 2), nx.petersen_graph()),
            (hamming(2, 3), nx.cartesian_product(nx.complete_graph(3), nx.complete_graph(3))),
        ],
    )
    def test_isomorphic_to_networkx(self, g, reference):
        """Test each family member matches the networkx construction."""
        assert nx.is_isomorphic(to_networkx(g), reference)

    def test_hypercube_numbering(self):
        """Test vertices differing in one bit are adjacent."""
        g = hypercube(3)
        assert g.neighbors(0) == (1, 2, 4)
        assert g.m == 12

    def test_kneser_counts(self):
        """Test n, m and valency of K(7, 3)."""
        g = kneser(7, 3)
        assert g.n == 35
        assert is_regular(g) == 4
        assert g == odd_graph(4)

    def test_hamming_counts(self):
        """Test H(3, 2) is the 3-cube up to numbering."""
        g = hamming(3, 2)
        assert g.n == 8
        assert is_regular(g) == 3
        assert nx.is_isomorphic(to_networkx(g), to_networkx(hypercube(3)))

    @pytest.mark.parametrize(
        "builder,args",
        [
            (cycle, (2,)),
            (complete, (0,)),
            (kneser, (3, 2)),
            (odd_graph, (1,)),
            (hamming, (2, 1)),
            (hypercube, (0,)),
        ],
    )
    def test_parameters_out_of_domain(self, builder, args):
        """Test each family rejects parameters outside its domain."""
        with pytest.raises(FamilyError):
            builder(*args)


class TestFamilySpec:
    """Test the name:params syntax."""

    def test_parse(self):
        """Test name and parameters."""
        spec = FamilySpec.parse("kneser:7,3")
        assert spec.name == "kneser"
        assert spec.params == (7, 3)
        assert spec.to_text() == "kneser:7,3"

    def test_parse_alias_without_params(self):
        """Test parameterless aliases and case folding."""
        spec = FamilySpec.parse("Petersen")
        assert spec.params == ()
        assert spec.to_text() == "petersen"
        assert generate(spec) == kneser(5, 2)

    @pytest.mark.parametrize("text", ["nosuch:3", "cycle:x", "hypercube:1,"])
    def test_parse_errors(self, text):
        """Test unknown names and non-integer parameters."""
        with pytest.raises(FamilyError):
            FamilySpec.parse(text)

    def test_wrong_arity(self):
        """Test generate checks the parameter count."""
        with pytest.raises(FamilyError):
            generate(FamilySpec.parse("kneser:5"))

    def test_every_family_generates(self):
        """Test each registered family builds a connected graph."""
        samples = {1: (4,), 2: (3, 2), 0: ()}
        overrides = {"kneser": (5, 2), "odd": (3,), "hamming": (2, 3)}
        for name, (arity, _) in FAMILIES.items():
            params = overrides.get(name, samples[arity])
            g = generate(FamilySpec(name=name, params=params))
            assert compute_distance_data(g).diameter >= 1


class TestFixtures:
    """Test packaged fixtures and sidecar validation."""

    def test_wells(self, wells):
        """Test the Wells graph loads with its declared invariants."""
        assert wells.n == 32
        assert wells.m == 80
        assert is_regular(wells) == 5
        assert compute_distance_data(wells).diameter == 4

    def test_wells_ships_as_graph6(self, wells):
        """Test the packaged file is graph6 and matches the encoder byte for byte."""
        g6_path = DATA_DIR / "wells.g6"
        assert g6_path.exists()
        assert not (DATA_DIR / "wells.edges").exists()
        assert g6_path.read_text(encoding="ascii").strip() == encode_graph6(wells)

    def test_edge_list_fixture(self, tmp_path, wells):
        """Test the edge-list alternative loads the same graph against the same sidecar."""
        (tmp_path / "wells.edges").write_text(encode_edge_list(wells), encoding="utf-8")
        sidecar = (DATA_DIR / "wells.properties").read_text(encoding="utf-8")
        (tmp_path / "wells.properties").write_text(sidecar, encoding="utf-8")
        assert load_fixture("wells", tmp_path) == wells

    def test_list_fixtures(self):
        """Test the packaged names."""
        assert "wells" in list_fixtures()

    def test_graph6_fixture(self, tmp_path):
        """Test a graph6 fixture with a full sidecar."""
        (tmp_path / "triangle.g6").write_text("Bw\n", encoding="utf-8")
        (tmp_path / "triangle.properties").write_text(
            "name = triangle\nn = 3\nm = 3\ndegree = 2\ndiameter = 1\nintersection_array = {2;1}\n",
            encoding="utf-8",
        )
        assert load_fixture("triangle", tmp_path) == complete(3)
        assert list_fixtures(tmp_path) == ["triangle"]

    def test_missing_fixture(self, tmp_path):
        """Test an unknown name."""
        with pytest.raises(FixtureError):
            load_fixture("nothing", tmp_path)

    def test_missing_sidecar(self, tmp_path):
        """Test a graph file without properties."""
        (tmp_path / "edge.edges").write_text("0 1\n", encoding="utf-8")
        with pytest.raises(FixtureError):
            load_fixture("edge", tmp_path)

    def test_invariant_mismatch(self, tmp_path):
        """Test a sidecar that disagrees with the graph."""
        (tmp_path / "square.edges").write_text("0 1\n1 2\n2 3\n3 0\n", encoding="utf-8")
        (tmp_path / "square.properties").write_text("name = square\nn = 4\nm = 4\ndiameter = 3\n", encoding="utf-8")
        with pytest.raises(FixtureError, match="diameter"):
            load_fixture("square", tmp_path)

    def test_malformed_sidecar(self, tmp_path):
        """Test a sidecar line without '='."""
        (tmp_path / "edge.edges").write_text("0 1\n", encoding="utf-8")
        (tmp_path / "edge.properties").write_text("name edge\n", encoding="utf-8")
        with pytest.raises(FixtureError):
            load_fixture("edge", tmp_path)
