"""Distance partitions induced by adjacent vertex pairs and by edges."""

from .models import (
    CellLabel,
    EdgeLocalCounts,
    EdgePartition,
    LocalCounts,
    PairPartition,
    PartitionError,
    ProofFact,
    ProofFactRecord,
)
from .cells import (
    edge_local_counts,
    edge_partition,
    is_equitable,
    local_counts,
    pair_partition,
)
from .proof_facts import proof_fact_oracles

__all__ = [
    "CellLabel",
    "EdgeLocalCounts",
    "EdgePartition",
    "LocalCounts",
    "PairPartition",
    "PartitionError",
    "ProofFact",
    "ProofFactRecord",
    "edge_local_counts",
    "edge_partition",
    "is_equitable",
    "local_counts",
    "pair_partition",
    "proof_fact_oracles",
]
