"""Bernoulli numbers, the linear form psi(x^n) = B_n, and closed-form
evaluations of psi on products of binomial polynomials."""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .poly import Poly

__all__ = [
    "BernoulliCache",
    "bernoulli",
    "psi",
    "psi_binom_product",
    "eval_psi_closed",
    "eval_psi2_closed",
    "eval_psi2_expanded",
]


class BernoulliCache:
    """Memoized B_n with B_1 = -1/2 (generating function t/(e^t - 1)).

    Extension is serialized by a lock; reads of already computed entries
    never block.
    """

    def __init__(self):
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("Bernoulli index must be >= 0")
        if n >= len(self._values):
            self.extend(n)
        return self._values[n]

    def extend(self, n: int) -> None:
        with self._lock:
            vals = self._values
            for m in range(len(vals), n + 1):
                if m > 1 and m % 2:
                    vals.append(Fraction(0))
                    continue
                # sum_{k=0}^{m} binom(m+1, k) B_k = 0
                s = sum(comb(m + 1, k) * vals[k] for k in range(m) if vals[k])
                vals.append(-s / (m + 1))

    def values(self, count: int) -> list[Fraction]:
        if count:
            self[count - 1]
        return self._values[:count]


_CACHE = BernoulliCache()


def bernoulli(n: int) -> Fraction:
    return _CACHE[n]


def psi(p: Poly) -> Fraction:
    """psi(sum c_i x^i) = sum c_i B_i."""
    bs = _CACHE.values(len(p.coeffs))
    return sum((c * b for c, b in zip(p.coeffs, bs) if b), Fraction(0))


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def psi_binom_product(d: int, e: int, i: int, j: int) -> Fraction:
    """psi(binom(x+i, d) binom(x+j, e)) in closed form, 0 <= i <= d, 0 <= j <= e."""
    if d < 0 or e < 0:
        raise ValueError("d and e must be >= 0")
    if not (0 <= i <= d and 0 <= j <= e):
        raise ValueError(f"(i, j) = ({i}, {j}) outside 0 <= i <= {d}, 0 <= j <= {e}")
    return Fraction(_sign(d + e - i - j), (d + e + 1) * comb(d + e, d - i + j))


def eval_psi_closed(d: int, e: int, i: int, j: int) -> Fraction:
    """psi(binom(-x+i, d) binom(x+j, e)) in closed form, 0 <= i <= d-1, 0 <= j <= e."""
    if d < 0 or e < 0:
        raise ValueError("d and e must be >= 0")
    if not (0 <= i <= d - 1 and 0 <= j <= e):
        raise ValueError(f"(i, j) = ({i}, {j}) outside 0 <= i <= {d - 1}, 0 <= j <= {e}")
    return Fraction(_sign(d + e - i - j - 1), (d + e + 1) * comb(d + e, i + j + 1))


def eval_psi2_closed(k: int) -> Fraction:
    """psi(binom(x+2, 2) binom(-x-3+k, k) binom(x+k, k)) = -1/((2k+3)(2k+1)(2k-1))."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return Fraction(-1, (2 * k + 3) * (2 * k + 1) * (2 * k - 1))


def eval_psi2_expanded(k: int) -> Fraction:
    """The same value summed over the three-term binomial expansion of
    binom(x+2, 2) binom(x+2, k), each term evaluated by psi_binom_product."""
    if k < 0:
        raise ValueError("k must be >= 0")
    total = Fraction(0)
    for ell in range(2, 5):
        weight = comb(2, ell - 2) * comb(k, ell - 2)
        if weight:
            total += weight * psi_binom_product(2 + k, k, ell, k)
    return _sign(k) * total
