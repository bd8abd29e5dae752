"""Verification ledger: every identity that applies to a graph, checked exactly."""

from .models import LedgerEntry, LedgerStatus, VerificationLedger
from .ledger import CHECKS, proof_fact_records, verify_graph

__all__ = [
    "LedgerEntry",
    "LedgerStatus",
    "VerificationLedger",
    "CHECKS",
    "proof_fact_records",
    "verify_graph",
]
