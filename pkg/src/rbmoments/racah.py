"""Racah polynomials as exact polynomials in the moment variable.

``R_n`` is the terminating 4F3 series

    sum_k (-n)_k (n+a+b+1)_k (-x)_k (x+g+d+1)_k / ((a+1)_k (b+d+1)_k (g+1)_k k!)

which depends on x only through y = x(x+g+d+1).  With s = g+d+1 each
product (-x)_k (x+s)_k equals prod_{j<k} (j(j+s) - y), so the y-form is
assembled directly and no division or interpolation is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import ONE, Poly, as_rat

__all__ = [
    "RacahParams",
    "InadmissibleParameters",
    "pochhammer_rat",
    "pochhammer_poly",
    "hyp2f1_terminating",
    "racah_coefficients",
    "racah_poly",
    "racah_family",
    "racah_x_form",
    "racah_sum_at",
    "racah_leading",
    "monic_racah",
]


class InadmissibleParameters(ValueError):
    """A Pochhammer factor in a denominator (or normalization) vanishes."""

    def __init__(self, factor: str, k: int):
        self.factor = factor
        self.k = k
        super().__init__(f"{factor} vanishes at k = {k}")


@dataclass(frozen=True)
class RacahParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> RacahParams:
        parts = [t for t in text.replace(" ", "").split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected four comma-separated rationals, got {text!r}")
        return cls(*parts)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.as_tuple())

    @property
    def lam_shift(self) -> Fraction:
        """s in lambda(x) = x(x + s), s = gamma + delta + 1."""
        return self.gamma + self.delta + 1

    def lambda_poly(self) -> Poly:
        return Poly((0, self.lam_shift, 1))

    def denominator_bases(self) -> dict[str, Fraction]:
        return {
            "(alpha+1)_k": self.alpha + 1,
            "(beta+delta+1)_k": self.beta + self.delta + 1,
            "(gamma+1)_k": self.gamma + 1,
        }

    def check_admissible(self, depth: int) -> None:
        """Raise unless no denominator Pochhammer factor vanishes for k <= depth."""
        for name, base in self.denominator_bases().items():
            if base.denominator == 1 and -depth < base <= 0:
                raise InadmissibleParameters(name, int(1 - base))


def pochhammer_rat(x0, k: int) -> Fraction:
    """Rising factorial (x0)_k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    x0 = as_rat(x0)
    out = Fraction(1)
    for j in range(k):
        out *= x0 + j
    return out


def pochhammer_poly(base: Poly, k: int) -> Poly:
    if k < 0:
        raise ValueError("k must be >= 0")
    out = ONE
    for j in range(k):
        out = out * (base + j)
    return out


def hyp2f1_terminating(n: int, b, c) -> Fraction:
    """2F1(-n, b; c; 1) as the finite sum over k <= n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    b, c = as_rat(b), as_rat(c)
    total = term = Fraction(1)
    for k in range(n):
        if c + k == 0:
            raise InadmissibleParameters("(c)_k", k + 1)
        term = term * (k - n) * (b + k) / ((c + k) * (k + 1))
        total += term
    return total


def racah_coefficients(params: RacahParams, n: int) -> list[Fraction]:
    """Scalar factors (-n)_k (n+a+b+1)_k / ((a+1)_k (b+d+1)_k (g+1)_k k!), k = 0..n."""
    params.check_admissible(n)
    a, b, g, d = params.as_tuple()
    top = n + a + b + 1
    bot1, bot2, bot3 = a + 1, b + d + 1, g + 1
    out = [Fraction(1)]
    for k in range(n):
        ratio = (k - n) * (top + k) / ((bot1 + k) * (bot2 + k) * (bot3 + k) * (k + 1))
        out.append(out[-1] * ratio)
    return out


def racah_poly(params: RacahParams, n: int) -> Poly:
    """R_n as a polynomial in y = lambda(x)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    s = params.lam_shift
    coeffs = racah_coefficients(params, n)
    total = Poly.const(coeffs[0])
    block = ONE
    for k in range(1, n + 1):
        j = k - 1
        block = block * Poly((j * (j + s), -1))
        total = total + block * coeffs[k]
    return total


def racah_family(params: RacahParams, depth: int) -> list[Poly]:
    """[R_0, ..., R_{depth-1}] with admissibility checked once up front."""
    params.check_admissible(max(depth - 1, 0))
    return [racah_poly(params, n) for n in range(depth)]


def racah_x_form(params: RacahParams, n: int) -> Poly:
    """R_n(lambda(x)) as a degree-2n polynomial in x, straight from the sum."""
    s = params.lam_shift
    coeffs = racah_coefficients(params, n)
    minus_x = Poly((0, -1))
    plus_x = Poly((s, 1))
    return sum(
        (pochhammer_poly(minus_x, k) * pochhammer_poly(plus_x, k) * c for k, c in enumerate(coeffs)),
        Poly(),
    )


def racah_sum_at(params: RacahParams, n: int, x0) -> Fraction:
    """The defining finite sum evaluated at a rational point x = x0."""
    x0 = as_rat(x0)
    s = params.lam_shift
    return sum(
        (c * pochhammer_rat(-x0, k) * pochhammer_rat(x0 + s, k) for k, c in enumerate(racah_coefficients(params, n))),
        Fraction(0),
    )


def racah_leading(params: RacahParams, n: int) -> Fraction:
    """(n+a+b+1)_n / ((a+1)_n (b+d+1)_n (g+1)_n), the y-leading coefficient of R_n."""
    params.check_admissible(n)
    a, b, g, d = params.as_tuple()
    return pochhammer_rat(n + a + b + 1, n) / (
        pochhammer_rat(a + 1, n) * pochhammer_rat(b + d + 1, n) * pochhammer_rat(g + 1, n)
    )


def monic_racah(params: RacahParams, n: int) -> Poly:
    lead = racah_leading(params, n)
    if lead == 0:
        raise InadmissibleParameters("(n+alpha+beta+1)_n", n)
    return racah_poly(params, n) / lead

