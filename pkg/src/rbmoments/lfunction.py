"""The series L_P(s) = sum_{n>=0} P'(n) / P(n)^s.

Exact values at s = 1 - n come from psi; numerical values on
Re(s) > 1 - 1/deg P come from the term-collected continuation

    L_P(s) = 1/(s-1) + sum_n int_{A(n)}^{A(n+1)} (P(n)^-s - x^-s) dx,

where A is the antidifference of P' with A(0) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

import numpy as np

from .bernoulli import psi
from .poly import ONE, Poly, binom_poly

__all__ = [
    "LSeriesSpec",
    "LResult",
    "DomainError",
    "ToleranceNotReached",
    "antidifference",
    "l_value_neg",
    "l_eval",
    "l_direct",
    "L2_SPEC",
]


class DomainError(ValueError):
    pass


class ToleranceNotReached(RuntimeError):
    def __init__(self, result: LResult, tol: float):
        self.result = result
        super().__init__(
            f"tail estimate {result.error:.3e} above tol {tol:.3e} after {result.terms} terms"
        )


def _newton_coefficients(p: Poly) -> list[Fraction]:
    """c_m with p(x) = sum_m c_m binom(x, m): forward differences at 0."""
    vals = [p(k) for k in range(max(p.degree, 0) + 1)] if p.coeffs else []
    out = []
    while vals:
        out.append(vals[0])
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return out


def antidifference(pprime: Poly) -> Poly:
    """The polynomial A with A(0) = 1 and A(x+1) - A(x) = pprime(x)."""
    out = ONE
    for m, c in enumerate(_newton_coefficients(pprime)):
        if c:
            out = out + binom_poly(0, m + 1) * c
    return out


def _cauchy_bound(p: Poly) -> Fraction:
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def _positive_on_naturals(p: Poly) -> bool:
    if p.leading <= 0:
        return False
    # beyond the Cauchy bound there are no roots and p > 0
    return all(p(k) > 0 for k in range(ceil(_cauchy_bound(p)) + 1))


@dataclass(frozen=True)
class LSeriesSpec:
    P: Poly
    Pprime: Poly
    d: int
    A: Poly

    @classmethod
    def from_poly(cls, P: Poly) -> LSeriesSpec:
        if P.degree < 1:
            raise DomainError("P must have degree >= 1")
        if not _positive_on_naturals(P):
            raise DomainError(f"P = {P} must be positive at every integer n >= 0")
        pprime = P.derivative()
        A = antidifference(pprime)
        if not _positive_on_naturals(A):
            raise DomainError(f"antidifference A = {A} must be positive at every integer n >= 0")
        return cls(P, pprime, P.degree, A)

    @property
    def abscissa(self) -> float:
        """Re(s) must exceed this for the continuation series."""
        return 1.0 - 1.0 / self.d


L2_SPEC = LSeriesSpec.from_poly(binom_poly(2, 2))


def l_value_neg(spec: LSeriesSpec, n: int) -> Fraction:
    """L_P(1 - n) = -psi(P^n)/n, n >= 1."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return -psi(spec.P**n) / n


@dataclass
class LResult:
    value: complex
    error: float
    terms: int
    converged: bool = True


def _float_coeffs(p: Poly) -> np.ndarray:
    # np.polyval wants highest degree first
    return np.array([float(c) for c in reversed(p.coeffs)], dtype=float)


def _as_complex(s) -> complex:
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError("s must be finite")
    return s


def _collected_terms(spec: LSeriesSpec, s: complex, n: np.ndarray):
    """Terms int_{A(n)}^{A(n+1)} (P(n)^-s - x^-s) dx and a per-term bound."""
    P = np.polyval(_float_coeffs(spec.P), n)
    dP = np.polyval(_float_coeffs(spec.Pprime), n)
    A0 = np.polyval(_float_coeffs(spec.A), n)
    logP = np.log(P)
    logA0 = np.log(A0)
    one_s = 1.0 - s
    # A(n+1)^(1-s) - A(n)^(1-s) = A(n)^(1-s) * expm1((1-s) log(1 + P'(n)/A(n)))
    diff = np.exp(one_s * logA0) * np.expm1(one_s * np.log1p(dP / A0))
    head = dP * np.exp(-s * logP)
    terms = head - diff / one_s

    # Second-order Taylor bound of x^-s around P(n) on [A(n), A(n+1)]:
    # |term| <= |s| P^(-sig-1) |M1| + |s(s+1)|/2 m^(-sig-2) M2,
    # M1 = int (x - P) dx, M2 = int (x - P)^2 dx, m = min of P and the endpoints.
    sigma = s.real
    lo = A0 - P
    hi = lo + dP
    m1 = (hi * hi - lo * lo) / 2.0
    m2 = np.abs(hi**3 - lo**3) / 3.0
    m = np.minimum(P, np.minimum(A0, A0 + dP))
    bound = abs(s) * np.exp((-sigma - 1.0) * logP) * np.abs(m1) + abs(s * (s + 1)) / 2.0 * np.exp(
        (-sigma - 2.0) * np.log(m)
    ) * m2
    return terms, bound, np.abs(head)


EPS = float(np.finfo(float).eps)


def _pairwise_sum(x: np.ndarray) -> complex:
    # numpy's add.reduce is pairwise over contiguous blocks: deterministic for a given length
    return complex(np.add.reduce(x))


def l_eval(spec: LSeriesSpec, s, tol: float = 1e-10, max_terms: int = 10**7) -> LResult:
    """Evaluate L_P(s) for Re(s) > 1 - 1/d, s != 1.

    Terms are summed in doubling blocks.  After each block the tail
    sum_{n >= N} |term_n| is estimated as b_N (1 + N/(p - 1)), with b_N the
    second-order bound of the last term and p = d(Re s - 1) + 2 the
    guaranteed decay exponent of b_n (true decay is often one power
    faster, so the estimate errs high).  Raises :class:`ToleranceNotReached`
    if max_terms are exhausted first.
    """
    s = _as_complex(s)
    if s == 1:
        raise DomainError("s = 1 is the simple pole of L_P")
    if s.real <= spec.abscissa:
        raise DomainError(f"Re(s) = {s.real} must exceed 1 - 1/d = {spec.abscissa}")
    p = spec.d * (s.real - 1.0) + 2.0
    pole = 1.0 / (s - 1.0)
    total = pole
    magnitude = abs(pole)
    start, block = 0, 1024
    tail = math.inf
    while start < max_terms:
        stop = min(start + block, max_terms)
        n = np.arange(start, stop, dtype=float)
        terms, bound, head = _collected_terms(spec, s, n)
        total += _pairwise_sum(terms)
        magnitude += float(head.sum())
        start = stop
        tail = float(bound[-1]) * (1.0 + start / (p - 1.0))
        if tail < tol:
            break
        block *= 2
    # each term cancels two quantities of size ~ head, so roundoff scales with their sum
    rounding = 8.0 * EPS * magnitude * math.log2(start + 2)
    result = LResult(total, tail + rounding, start, tail < tol)
    if not result.converged:
        raise ToleranceNotReached(result, tol)
    return result


def l_direct(spec: LSeriesSpec, s, terms: int = 10**6) -> LResult:
    """Plain partial sum of P'(n)/P(n)^s over n < terms, Re(s) > 1.

    The reported error is the integral-comparison bound
    P(N-1)^(1-Re s)/(Re s - 1) on the omitted tail plus a roundoff allowance.
    """
    s = _as_complex(s)
    if s.real <= 1:
        raise DomainError("the defining series needs Re(s) > 1")
    if terms < 1:
        raise DomainError("terms must be >= 1")
    total = 0j
    magnitude = 0.0
    chunk = 1 << 20
    pc, dc = _float_coeffs(spec.P), _float_coeffs(spec.Pprime)
    for start in range(0, terms, chunk):
        n = np.arange(start, min(start + chunk, terms), dtype=float)
        vals = np.polyval(dc, n) * np.exp(-s * np.log(np.polyval(pc, n)))
        total += _pairwise_sum(vals)
        magnitude += float(np.abs(vals).sum())
    last = float(spec.P(max(terms - 1, 0)))
    tail = last ** (1.0 - s.real) / (s.real - 1.0)
    rounding = 4.0 * EPS * magnitude * math.log2(terms + 2)
    return LResult(total, tail + rounding, terms)
