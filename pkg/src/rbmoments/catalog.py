"""The five Racah moment theorems, frozen as data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .moments import TargetSeq, TheoremSpec
from .poly import ONE, Poly
from .racah import RacahParams
from .sequences import RSeqKind, r_value

__all__ = ["CatalogEntry", "catalog", "get_entry", "THEOREM_IDS"]

THEOREM_IDS = ("T1", "T2", "T3", "T4", "T5")

_XX1 = Poly((0, 1, 1))  # x(x+1)
_X1X2 = Poly((2, 3, 1))  # (x+1)(x+2)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    spec: TheoremSpec
    description: str

    def to_dict(self) -> dict:
        return {"id": self.id, "description": self.description, **self.spec.to_dict()}


def _entry(id, params, weight, subst, shift, kind, offset, x_offset, description):
    norm = 2**offset * r_value(kind, offset)
    spec = TheoremSpec(
        params=RacahParams(*params),
        weight=weight,
        subst=subst,
        shift=Fraction(shift),
        normalizer=norm,
        target=TargetSeq(kind, offset),
        x_offset=x_offset,
    )
    return CatalogEntry(id, spec, description)


@lru_cache(maxsize=1)
def catalog() -> tuple[CatalogEntry, ...]:
    half = Fraction(1, 2)
    P, M = RSeqKind.PLUS, RSeqKind.MINUS
    return (
        _entry("T1", (0, -half, 0, 0), ONE, _XX1, 0, M, 0, 0,
               "2^n R-_n are the moments of Racah R_n with (0, -1/2, 0, 0)"),
        _entry("T2", (-half, 1, 0, 0), _XX1, _XX1, 0, M, 1, 0,
               "2^n R-_(n+1)/R-_1 are the moments of Racah R_n with (-1/2, 1, 0, 0)"),
        _entry("T3", (0, half, 0, -2), _X1X2, _X1X2, 0, P, 1, 2,
               "2^n R+_(n+1)/R+_1 are the moments of Racah R_n with (0, 1/2, 0, -2)"),
        _entry("T4", (-half, 2, 1, -1), _X1X2**2, _X1X2, 0, P, 2, 1,
               "2^n R+_(n+2)/R+_2 are the moments of Racah R_n with (-1/2, 2, 1, -1)"),
        _entry("T5", (2, half, 2, 0), _X1X2**3, _X1X2, -2, P, 3, 0,
               "2^n R+_(n+3)/R+_3 are the moments of Racah R_n with (2, 1/2, 2, 0) at y - 2"),
    )


def get_entry(key) -> CatalogEntry:
    """Look up by id ("T3"), by number (3 or "3")."""
    text = str(key).strip().upper()
    if not text.startswith("T"):
        text = "T" + text
    for entry in catalog():
        if entry.id == text:
            return entry
    raise KeyError(f"no theorem {key!r}; choose from {', '.join(THEOREM_IDS)}")
