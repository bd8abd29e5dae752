"""Report model and its text and JSON renderings."""

import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..classify import ClassificationReport, Witness
from ..polynomials import PolySequence
from ..verification import VerificationLedger


class PolynomialListing(BaseModel):
    """One polynomial sequence rendered with exact coefficients."""

    label: str = Field(..., description="e.g. vertex/gram-schmidt")
    polys: List[str]

    @classmethod
    def from_sequence(cls, seq: PolySequence) -> "PolynomialListing":
        return cls(label=f"{seq.kind.value}/{seq.source.value}", polys=seq.to_text())


class Report(BaseModel):
    """Everything a command prints; rendering is deterministic apart from ``elapsed_seconds``."""

    command: str
    source: str = Field(..., description="Where the graph came from")
    classification: ClassificationReport
    polynomials: List[PolynomialListing] = Field(default_factory=list)
    hoffman: Optional[str] = None
    ledger: Optional[VerificationLedger] = None
    notes: List[str] = Field(default_factory=list)
    elapsed_seconds: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.ledger is None or self.ledger.passed

    # machine format

    def to_payload(self) -> Dict[str, Any]:
        c = self.classification
        payload: Dict[str, Any] = {
            "command": self.command,
            "source": self.source,
            "graph": {
                "n": c.n,
                "m": c.m,
                "degree": c.degree,
                "bipartite": c.bipartite,
                "odd_girth": c.odd_girth,
                "diameter": c.diameter,
                "edge_diameter": c.edge_diameter,
                "spectral_diameter": c.spectral_diameter,
                "sphere_sizes": list(c.sphere_sizes) if c.sphere_sizes is not None else None,
            },
            "classification": {
                "drg": c.distance_regular.to_text() if c.distance_regular else None,
                "edrg": c.edge_distance_regular.to_text() if c.edge_distance_regular else None,
                "homogeneous": c.homogeneous is not None,
                "generalized_odd": c.generalized_odd,
                "witnesses": {
                    key: _witness_payload(w)
                    for key, w in _witnesses(c).items()
                },
            },
            "notes": list(c.notes) + list(self.notes),
        }
        if c.homogeneous is not None:
            q = c.homogeneous
            payload["classification"]["quotient"] = {
                "labels": [f"{i},{j}" for i, j in q.labels],
                "sizes": list(q.sizes),
                "matrix": [list(row) for row in q.matrix],
            }
        if self.polynomials:
            payload["polynomials"] = {p.label: list(p.polys) for p in self.polynomials}
        if self.hoffman is not None:
            payload["hoffman"] = self.hoffman
        if self.ledger is not None:
            payload["ledger"] = [
                {"name": e.name, "status": e.status.value, "detail": e.detail}
                for e in self.ledger.entries
            ]
            payload["passed"] = self.ledger.passed
        if self.elapsed_seconds is not None:
            payload["elapsed_seconds"] = self.elapsed_seconds
        return payload

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), indent=2, sort_keys=True)

    # line-oriented format

    def to_text(self) -> str:
        c = self.classification
        lines = [
            f"command={self.command}",
            f"input={self.source}",
            f"n={c.n}",
            f"m={c.m}",
            f"degree={_opt(c.degree)}",
            f"bipartite={_flag(c.bipartite)}",
            f"odd_girth={_opt(c.odd_girth)}",
            f"diameter={c.diameter}",
            f"edge_diameter={c.edge_diameter}",
            f"spectral_diameter={c.spectral_diameter}",
            f"sphere_sizes={','.join(map(str, c.sphere_sizes)) if c.sphere_sizes is not None else 'none'}",
            f"drg={c.distance_regular.to_text() if c.distance_regular else 'none'}",
            f"edrg={c.edge_distance_regular.to_text() if c.edge_distance_regular else 'none'}",
            f"homogeneous={_flag(c.homogeneous is not None)}",
            f"generalized_odd={_flag(c.generalized_odd)}",
        ]
        for key, w in _witnesses(c).items():
            lines.append(f"witness.{key}={_witness_text(w)}")
        for note in list(c.notes) + list(self.notes):
            lines.append(f"note={note}")
        if c.homogeneous is not None and self.command == "classify":
            lines.append("quotient:")
            lines.extend("  " + row for row in c.homogeneous.to_frame().to_string().splitlines())
        for listing in self.polynomials:
            for i, text in enumerate(listing.polys):
                lines.append(f"poly.{listing.label}[{i}]={text}")
        if self.hoffman is not None:
            lines.append(f"hoffman={self.hoffman}")
        if self.ledger is not None:
            for e in self.ledger.entries:
                lines.append(f"ledger.{e.name}={e.status.value}" + (f"  # {e.detail}" if e.detail else ""))
            counts = self.ledger.counts()
            lines.append(f"summary=pass:{counts['pass']} fail:{counts['fail']} skip:{counts['skip']}")
        if self.elapsed_seconds is not None:
            lines.append(f"elapsed_seconds={self.elapsed_seconds:.6f}")
        return "\n".join(lines) + "\n"

    def render(self, machine: bool) -> str:
        return self.to_json() + "\n" if machine else self.to_text()


def _opt(value: Optional[int]) -> str:
    return "none" if value is None else str(value)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _witnesses(c: ClassificationReport) -> Dict[str, Witness]:
    found = {
        "drg": c.distance_regular_witness,
        "edrg": c.edge_distance_regular_witness,
        "homogeneous": c.homogeneity_witness,
    }
    return {key: w for key, w in found.items() if w is not None}


def _witness_payload(w: Witness) -> Dict[str, Any]:
    return {
        "stratum": w.stratum,
        "first": list(w.first),
        "second": list(w.second),
        "first_counts": list(w.first_counts),
        "second_counts": list(w.second_counts),
        "detail": w.detail,
    }


def _witness_text(w: Witness) -> str:
    text = f"{w.detail}: {w.first} vs {w.second}"
    if w.first_counts:
        text += f" counts {w.first_counts} vs {w.second_counts}"
    return text
