"""The Ramanujan-Bernoulli sequences R+ and R- and the u-shifted family."""

from __future__ import annotations

import enum
import threading
from fractions import Fraction

from .bernoulli import psi
from .poly import ONE, Poly, as_rat, binom_poly

__all__ = ["RSeqKind", "r_value", "r_sequence", "u_shift_value"]


class RSeqKind(enum.Enum):
    PLUS = "rplus"
    MINUS = "rminus"

    @property
    def quadratic(self) -> Poly:
        """binom(x+2, 2) for PLUS, binom(x+1, 2) for MINUS."""
        return binom_poly(2, 2) if self is RSeqKind.PLUS else binom_poly(1, 2)

    @classmethod
    def parse(cls, text) -> RSeqKind:
        if isinstance(text, cls):
            return text
        key = str(text).strip().lower()
        for kind in cls:
            if key in (kind.value, kind.name.lower(), kind.value[1:]):
                return kind
        raise ValueError(f"unknown sequence kind {text!r} (use rplus or rminus)")


class _Prefix:
    """Growable prefix psi(q^0), psi(q^1), ... with the running power kept."""

    def __init__(self, q: Poly):
        self.q = q
        self.power = ONE
        self.values: list[Fraction] = []
        self.lock = threading.Lock()

    def get(self, count: int) -> list[Fraction]:
        if count > len(self.values):
            with self.lock:
                while len(self.values) < count:
                    self.values.append(psi(self.power))
                    self.power = self.power * self.q
        return self.values[:count]


_PREFIXES = {kind: _Prefix(kind.quadratic) for kind in RSeqKind}


def _prefix(kind: RSeqKind, count: int) -> list[Fraction]:
    return _PREFIXES[kind].get(count)


def r_sequence(kind: RSeqKind, count: int) -> list[Fraction]:
    """First ``count`` values psi(q^n), with q the kind's quadratic."""
    if count < 0:
        raise ValueError("count must be >= 0")
    return _prefix(RSeqKind.parse(kind), count)


def r_value(kind: RSeqKind, n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    return _prefix(RSeqKind.parse(kind), n + 1)[n]


def u_shift_value(u, n: int) -> Fraction:
    """psi(((x+u)(x+1-u))^n), computed as psi((x(x+1) + u(1-u))^n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    u = as_rat(u)
    return psi(Poly((u * (1 - u), 1, 1)) ** n)
