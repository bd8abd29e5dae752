"""Named graph families and packaged fixtures."""

from .generators import (
    FAMILIES,
    FamilyError,
    FamilySpec,
    complete,
    complete_bipartite,
    cycle,
    generate,
    hamming,
    hypercube,
    kneser,
    odd_graph,
    path,
)
from .fixtures import DATA_DIR, FixtureError, FixtureProperties, list_fixtures, load_fixture

__all__ = [
    "FAMILIES",
    "FamilyError",
    "FamilySpec",
    "complete",
    "complete_bipartite",
    "cycle",
    "generate",
    "hamming",
    "hypercube",
    "kneser",
    "odd_graph",
    "path",
    "DATA_DIR",
    "FixtureError",
    "FixtureProperties",
    "list_fixtures",
    "load_fixture",
]
