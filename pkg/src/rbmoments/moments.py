"""Moment functionals of Racah families and their J-fraction / Hankel data.

A moment sequence ``mu`` is a plain list of Fractions with ``mu[0] == 1``;
the functional it defines is applied to a polynomial by dot product
(:func:`apply_functional`), never stored in any other form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional

from .bernoulli import psi
from .poly import ONE, X, Poly, as_rat
from .racah import InadmissibleParameters, RacahParams, racah_family
from .sequences import RSeqKind, r_value, u_shift_value

__all__ = [
    "MomentSeq",
    "QuasiDefiniteError",
    "TargetSeq",
    "TheoremSpec",
    "MomentRow",
    "TheoremReport",
    "UShiftReport",
    "JacobiData",
    "apply_functional",
    "favard_moments",
    "psi_moments",
    "orthogonality_residues",
    "verify_theorem",
    "verify_u_shift",
    "u_shift_params",
    "jacobi_from_moments",
    "moments_from_jacobi",
    "jfraction_series",
    "hankel_det",
    "hankel_dets",
]

MomentSeq = list  # list[Fraction], mu[n] = functional(y^n)


class QuasiDefiniteError(ArithmeticError):
    def __init__(self, k: int):
        self.k = k
        super().__init__(f"functional vanishes on p_{k}^2; moments are not quasi-definite at k = {k}")


def apply_functional(mu, p: Poly) -> Fraction:
    if len(p.coeffs) > len(mu):
        raise ValueError(f"need {len(p.coeffs)} moments, have {len(mu)}")
    return sum((c * m for c, m in zip(p.coeffs, mu)), Fraction(0))


# -- the two routes to a moment sequence


def favard_moments(params: RacahParams, shift, count: int) -> list[Fraction]:
    """Moments of the unique functional L with L(1) = 1 and
    L(R_n(y + shift)) = 0 for 1 <= n < count."""
    if count < 0:
        raise ValueError("count must be >= 0")
    if count == 0:
        return []
    shift = as_rat(shift)
    family = racah_family(params, count)
    mu = [Fraction(1)]
    for n in range(1, count):
        c = family[n].shift(shift).coeffs
        if len(c) != n + 1:
            raise InadmissibleParameters("(n+alpha+beta+1)_n", n)
        acc = sum((c[j] * mu[j] for j in range(n)), Fraction(0))
        mu.append(-acc / c[n])
    return mu


def psi_moments(weight: Poly, subst: Poly, normalizer=None, count: int = 0) -> list[Fraction]:
    """mu_n = psi(weight * subst^n) / psi(weight)."""
    norm = psi(weight)
    if norm == 0:
        raise ValueError("psi(weight) is zero; cannot normalize")
    if normalizer is not None and as_rat(normalizer) != norm:
        raise ValueError(f"normalizer {normalizer} differs from psi(weight) = {norm}")
    out = []
    term = weight
    for _ in range(count):
        out.append(psi(term) / norm)
        term = term * subst
    return out


def orthogonality_residues(params: RacahParams, weight: Poly, subst: Poly, shift, count: int) -> list[Fraction]:
    """psi(weight * R_n(subst(x) + shift)) for n = 0..count-1."""
    shift = as_rat(shift)
    inner = subst + shift
    return [psi(weight * r(inner)) for r in racah_family(params, count)]


# -- theorem packages


@dataclass(frozen=True)
class TargetSeq:
    """n -> 2^n R_{n+offset} / R_offset for the chosen sequence."""

    kind: RSeqKind
    offset: int

    def value(self, n: int, kind: Optional[RSeqKind] = None) -> Fraction:
        kind = kind or self.kind
        return 2**n * r_value(kind, n + self.offset) / r_value(kind, self.offset)

    def describe(self) -> str:
        sym = "R+" if self.kind is RSeqKind.PLUS else "R-"
        if self.offset == 0:
            return f"2^n {sym}_n"
        return f"2^n {sym}_(n+{self.offset}) / {sym}_{self.offset}"


@dataclass(frozen=True)
class TheoremSpec:
    """One moment theorem.

    The claimed functional has moments psi(weight * subst^n) / normalizer and
    annihilates y -> R_n(y + shift) for n >= 1.  ``x_offset`` records the
    structural fact subst(x) + shift = lambda(x + x_offset).
    """

    params: RacahParams
    weight: Poly
    subst: Poly
    shift: Fraction
    normalizer: Fraction
    target: TargetSeq
    x_offset: int = 0

    def structure_ok(self) -> bool:
        lam = self.params.lambda_poly()
        return (
            self.subst.degree == 2
            and self.subst + self.shift == lam(Poly((self.x_offset, 1)))
            and psi(self.weight) == self.normalizer != 0
        )

    def to_dict(self) -> dict:
        return {
            "params": [str(v) for v in self.params.as_tuple()],
            "weight": self.weight.to_text(),
            "subst": self.subst.to_text(),
            "shift": str(self.shift),
            "normalizer": str(self.normalizer),
            "target": self.target.describe(),
            "x_offset": self.x_offset,
        }


@dataclass
class MomentRow:
    n: int
    favard: Fraction
    psi: Fraction
    target: Fraction

    @property
    def agree(self) -> bool:
        return self.favard == self.psi == self.target


@dataclass
class TheoremReport:
    depth: int
    rows: list[MomentRow]
    residues: list[Fraction]
    normalizer: Fraction
    normalizer_ok: bool
    target_kind: RSeqKind

    @property
    def residues_vanish(self) -> bool:
        return all(r == 0 for r in self.residues[1:])

    @property
    def first_mismatch(self) -> Optional[int]:
        for row in self.rows:
            if not row.agree or (row.n and self.residues[row.n] != 0):
                return row.n
        return None

    @property
    def all_equal(self) -> bool:
        return self.normalizer_ok and self.first_mismatch is None

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "all_equal": self.all_equal,
            "first_mismatch": self.first_mismatch,
            "normalizer": str(self.normalizer),
            "normalizer_ok": self.normalizer_ok,
            "target_kind": self.target_kind.value,
            "rows": [
                {"n": r.n, "favard": str(r.favard), "psi": str(r.psi), "target": str(r.target),
                 "residue": str(self.residues[r.n])}
                for r in self.rows
            ],
        }


def verify_theorem(spec: TheoremSpec, depth: int, target_kind: Optional[RSeqKind] = None) -> TheoremReport:
    """Compare Favard moments, psi moments and the target for n < depth,
    and collect orthogonality residues."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    kind = RSeqKind.parse(target_kind) if target_kind is not None else spec.target.kind
    norm = psi(spec.weight)
    fav = favard_moments(spec.params, spec.shift, depth)
    via_psi = psi_moments(spec.weight, spec.subst, count=depth)
    rows = [MomentRow(n, fav[n], via_psi[n], spec.target.value(n, kind)) for n in range(depth)]
    residues = orthogonality_residues(spec.params, spec.weight, spec.subst, spec.shift, depth)
    return TheoremReport(depth, rows, residues, norm, norm == spec.normalizer, kind)


@dataclass
class UShiftReport:
    u: Fraction
    shift: Fraction
    psi_values: list[Fraction]
    favard_values: list[Fraction]

    @property
    def holds(self) -> bool:
        return self.psi_values == self.favard_values

    def to_dict(self) -> dict:
        return {
            "u": str(self.u),
            "shift": str(self.shift),
            "holds": self.holds,
            "psi": [str(v) for v in self.psi_values],
            "favard": [str(v) for v in self.favard_values],
        }


def u_shift_params() -> RacahParams:
    return RacahParams(0, Fraction(-1, 2), 0, 0)


def verify_u_shift(u, depth: int) -> UShiftReport:
    """psi(((x+u)(x+1-u))^n) against the moments of y -> R_n(y - u(1-u)),
    R_n the family with parameters (0, -1/2, 0, 0).

    The shift is negative: psi((y + t)^n) with y = x(x+1), t = u(1-u), is the
    original functional moved by t, which annihilates R_n(y - t).
    """
    u = as_rat(u)
    shift = -u * (1 - u)
    lhs = [u_shift_value(u, n) for n in range(depth)]
    rhs = favard_moments(u_shift_params(), shift, depth)
    return UShiftReport(u, shift, lhs, rhs)


# -- three-term recurrence data


@dataclass
class JacobiData:
    """Monic recurrence p_{k+1} = (y - b_k) p_k - lam_k p_{k-1}; lam[0] = 0."""

    b: list[Fraction]
    lam: list[Fraction]
    polys: list[Poly] = field(default_factory=list, repr=False)

    def __len__(self) -> int:
        return len(self.b)

    def norms(self) -> list[Fraction]:
        """L(p_k^2) = lam_1 ... lam_k."""
        out = [Fraction(1)]
        for lam in self.lam[1:]:
            out.append(out[-1] * lam)
        return out


def jacobi_from_moments(mu, depth: Optional[int] = None) -> JacobiData:
    """Build monic orthogonal polynomials against ``mu`` and read off
    b_k = L(y p_k^2)/L(p_k^2), lam_k = L(p_k^2)/L(p_{k-1}^2) for k < depth.

    Needs 2*depth moments.
    """
    if depth is None:
        depth = len(mu) // 2
    if 2 * depth > len(mu):
        raise ValueError(f"depth {depth} needs {2 * depth} moments, have {len(mu)}")
    b: list[Fraction] = []
    lam: list[Fraction] = []
    polys = [ONE]
    prev, cur = Poly(), ONE
    prev_norm = None
    for k in range(depth):
        sq = cur * cur
        norm = apply_functional(mu, sq)
        if norm == 0:
            raise QuasiDefiniteError(k)
        bk = apply_functional(mu, X * sq) / norm
        lk = Fraction(0) if prev_norm is None else norm / prev_norm
        b.append(bk)
        lam.append(lk)
        prev, cur = cur, (X - bk) * cur - prev * lk
        polys.append(cur)
        prev_norm = norm
    return JacobiData(b, lam, polys)


def moments_from_jacobi(jac: JacobiData, count: Optional[int] = None) -> list[Fraction]:
    """Regenerate moments by expanding y^n in the monic basis step by step.

    With depth D the first 2D moments are exact.
    """
    depth = len(jac)
    if count is None:
        count = 2 * depth
    if count > 2 * depth:
        raise ValueError(f"{depth} recurrence levels determine only {2 * depth} moments")
    # c[j] = coefficient of p_j in y^n; y p_j = p_{j+1} + b_j p_j + lam_j p_{j-1}
    c = [Fraction(0)] * depth
    if depth:
        c[0] = Fraction(1)
    out = []
    for _ in range(count):
        out.append(c[0])
        nxt = [Fraction(0)] * depth
        for j in range(depth):
            v = jac.b[j] * c[j]
            if j:
                v += c[j - 1]
            if j + 1 < depth:
                v += jac.lam[j + 1] * c[j + 1]
            nxt[j] = v
        c = nxt
    return out


def _series_inverse(a: list[Fraction]) -> list[Fraction]:
    n = len(a)
    inv = [Fraction(0)] * n
    inv[0] = 1 / a[0]
    for k in range(1, n):
        inv[k] = -sum((a[j] * inv[k - j] for j in range(1, k + 1)), Fraction(0)) / a[0]
    return inv


def jfraction_series(jac: JacobiData, count: int) -> list[Fraction]:
    """Taylor coefficients of 1/(1 - b_0 t - lam_1 t^2/(1 - b_1 t - ...)),
    the continued fraction truncated after len(jac) levels."""
    if count == 0:
        return []
    tail = [Fraction(0)] * count
    for k in range(len(jac) - 1, -1, -1):
        den = [Fraction(0)] * count
        den[0] = Fraction(1)
        if count > 1:
            den[1] -= jac.b[k]
        lam_next = jac.lam[k + 1] if k + 1 < len(jac) else Fraction(0)
        for i in range(count - 2):
            den[i + 2] -= lam_next * tail[i]
        tail = _series_inverse(den)
    return tail


# -- Hankel determinants


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * piv - m[i][k] * m[k][j]) // prev
        prev = piv
    return sign * m[n - 1][n - 1]


def hankel_det(mu, n: int) -> Fraction:
    """det (mu_{i+j})_{0 <= i, j < n}, by fraction-free elimination on the
    moments scaled to a common denominator."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if len(mu) < 2 * n - 1:
        raise ValueError(f"Hankel determinant of size {n} needs {2 * n - 1} moments, have {len(mu)}")
    vals = [as_rat(v) for v in mu[: 2 * n - 1]]
    scale = lcm(*(v.denominator for v in vals))
    ints = [v.numerator * (scale // v.denominator) for v in vals]
    det = _bareiss_det([[ints[i + j] for j in range(n)] for i in range(n)])
    return Fraction(det, scale**n)


def hankel_dets(mu, n: int) -> list[Fraction]:
    """[Delta_1, ..., Delta_n]."""
    return [hankel_det(mu, k) for k in range(1, n + 1)]
