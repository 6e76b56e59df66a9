"""Dense univariate polynomials with exact rational coefficients.

Scalars are :class:`fractions.Fraction` (aliased :data:`Rat`); a
:class:`Poly` stores its coefficients lowest degree first with trailing
zeros stripped, so the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Union

__all__ = [
    "Rat",
    "Poly",
    "X",
    "ONE",
    "ZERO",
    "as_rat",
    "parse_rat",
    "format_rat",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "poly_compose",
    "poly_shift",
    "binom_poly",
    "binom_poly_neg",
]

Rat = Fraction
Scalar = Union[int, Fraction]


def as_rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rat(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals and floats are refused."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not an exact rational: {text!r}") from None


def format_rat(q: Fraction) -> str:
    return str(q)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> Poly:
        return cls([0] * n + [c])

    # -- text format: "c0,c1,...", each "p/q" or "p"

    @classmethod
    def parse(cls, text: str) -> Poly:
        text = text.strip()
        if not text:
            return cls()
        return cls(parse_rat(t) for t in text.split(","))

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(format_rat(c) for c in self.coeffs)

    # -- basic queries

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            elif mono:
                parts.append(f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}")
            else:
                parts.append(str(c))
        return " + ".join(parts).replace("+ -", "- ")

    # -- ring operations

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            other = as_rat(other)
            return Poly(c / other for c in self.coeffs)
        return NotImplemented

    def __pow__(self, n: int) -> Poly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- evaluation and substitution

    def __call__(self, value):
        """Horner evaluation at a scalar or substitution of a Poly."""
        if isinstance(value, Poly):
            acc = Poly()
            for c in reversed(self.coeffs):
                acc = acc * value + c
            return acc
        if isinstance(value, int):
            value = Fraction(value)
        acc = 0 * value
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, q: Poly) -> Poly:
        return self(q)

    def shift(self, c: Scalar) -> Poly:
        """The polynomial y -> p(y + c), by repeated synthetic division."""
        c = as_rat(c)
        if c == 0:
            return self
        cs = list(self.coeffs)
        n = len(cs)
        # Taylor shift: after pass k, cs[k] is the k-th coefficient of p(y + c)
        for k in range(n - 1):
            for i in range(n - 2, k - 1, -1):
                cs[i] += c * cs[i + 1]
        return Poly(cs)

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod(self, divisor: Poly) -> tuple[Poly, Poly]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.leading
        if len(rem) <= dd:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - dd - 1, -1, -1):
            q = rem[k + dd] / lead
            quot[k] = q
            if q:
                for j, c in enumerate(divisor.coeffs):
                    rem[k + j] -= q * c
        return Poly(quot), Poly(rem[:dd])


X = Poly((0, 1))
ONE = Poly((1,))
ZERO = Poly()


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_pow(p: Poly, n: int) -> Poly:
    return p**n


def poly_compose(p: Poly, q: Poly) -> Poly:
    return p(q)


def poly_shift(p: Poly, c: Scalar) -> Poly:
    return p.shift(c)


def binom_poly(a: int, m: int) -> Poly:
    """binom(x + a, m) = (x+a)(x+a-1)...(x+a-m+1) / m!."""
    if m < 0:
        raise ValueError("m must be >= 0")
    out = ONE
    for j in range(m):
        out = out * Poly((a - j, 1))
    return out / factorial(m)


def binom_poly_neg(a: int, m: int) -> Poly:
    """binom(-x + a, m)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    out = ONE
    for j in range(m):
        out = out * Poly((a - j, -1))
    return out / factorial(m)

