"""Ledger entries produced by the verifier."""

from enum import Enum
from typing import Dict, List, Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field


class LedgerStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


class LedgerEntry(BaseModel):
    """Outcome of one named identity or characterization."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Identity name")
    status: LedgerStatus
    detail: str = Field("", description="Witness on failure, reason on skip, summary on pass")


class VerificationLedger(BaseModel):
    """Ordered list of entries; the run passes when no entry failed."""

    entries: List[LedgerEntry] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def failures(self) -> List[LedgerEntry]:
        return [e for e in self.entries if e.status == LedgerStatus.FAIL]

    def entry(self, name: str) -> Optional[LedgerEntry]:
        for e in self.entries:
            if e.name == name:
                return e
        return None

    def status_of(self, name: str) -> Optional[LedgerStatus]:
        e = self.entry(name)
        return e.status if e is not None else None

    def counts(self) -> Dict[str, int]:
        totals = {status.value: 0 for status in LedgerStatus}
        for e in self.entries:
            totals[e.status.value] += 1
        return totals

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{"name": e.name, "status": e.status.value, "detail": e.detail} for e in self.entries],
            columns=["name", "status", "detail"],
        )
