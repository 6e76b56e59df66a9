import math
import random
from fractions import Fraction

import mpmath
import pytest

from conftest import P
from rbmoments.lfunction import (
    L2_SPEC,
    DomainError,
    LSeriesSpec,
    ToleranceNotReached,
    antidifference,
    l_direct,
    l_eval,
    l_value_neg,
)
from rbmoments.poly import ONE, Poly, X
from rbmoments.sequences import RSeqKind, r_value

F = Fraction
ZETA = LSeriesSpec.from_poly(P("1,1"))


def mp_l2(s, head=2000):
    """Independent L_2(s), Re(s) > 1: 30-digit partial sum plus Euler-Maclaurin tail.

    mpmath's default (Richardson) nsum is unreliable for complex s here.
    """
    with mpmath.workdps(30):
        f = lambda n: (n + mpmath.mpf(3) / 2) / ((n + 1) * (n + 2) / 2) ** s
        return complex(mpmath.fsum(f(n) for n in range(head)) + mpmath.sumem(f, [head, mpmath.inf]))


class TestAntidifference:
    def test_examples(self):
        assert antidifference(P("3/2,1")) == P("1,1,1/2")
        assert antidifference(Poly()) == ONE
        assert antidifference(ONE) == P("1,1")

    def test_l2_spec(self):
        assert L2_SPEC.A == P("1,1,1/2")
        assert L2_SPEC.Pprime == P("3/2,1")
        assert L2_SPEC.d == 2
        assert L2_SPEC.A(1) - L2_SPEC.A(0) == F(3, 2)

    def test_random_identity(self):
        rng = random.Random(7)
        for _ in range(20):
            deg = rng.randint(0, 5)
            p = Poly(F(rng.randint(-30, 30), rng.randint(1, 7)) for _ in range(deg + 1))
            dp = p.derivative()
            a = antidifference(dp)
            assert a(X + 1) - a - dp == Poly()
            assert a(0) == 1


class TestExactValues:
    def test_examples(self):
        assert l_value_neg(L2_SPEC, 1) == F(-1, 3)
        assert l_value_neg(L2_SPEC, 2) == F(-1, 60)
        assert l_value_neg(L2_SPEC, 6) == F(-191, 180180)

    def test_against_sequence(self):
        for n in range(1, 31):
            assert l_value_neg(L2_SPEC, n) == -r_value(RSeqKind.PLUS, n) / n

    @pytest.mark.parametrize("n", range(1, 12))
    def test_zeta_negative_integers(self, n):
        # for P = x + 1 the series is the Riemann zeta function
        assert float(l_value_neg(ZETA, n)) == pytest.approx(float(mpmath.zeta(1 - n)), rel=1e-14, abs=1e-300)

    def test_n_positive(self):
        with pytest.raises(DomainError):
            l_value_neg(L2_SPEC, 0)


class TestSpecValidation:
    @pytest.mark.parametrize("text", ["0,1,1", "-3,1", "5", "1,-1"])
    def test_rejects(self, text):
        with pytest.raises(DomainError):
            LSeriesSpec.from_poly(P(text))

    def test_accepts_far_root(self):
        # roots at -1/2 and -5 lie off the naturals
        spec = LSeriesSpec.from_poly(P("5,11,2"))
        assert spec.d == 2


class TestNumeric:
    def test_zeta_two(self):
        r = l_eval(ZETA, 2, tol=1e-10)
        assert abs(r.value - math.pi**2 / 6) < 1e-8
        assert r.converged and r.error < 1e-10

    def test_zeta_four(self):
        assert abs(l_eval(ZETA, 4, tol=1e-12).value - math.pi**4 / 90) < 1e-10

    @pytest.mark.parametrize("s,tol", [(1.5, 1e-9), (2 + 1j, 1e-9), (3 - 7j, 1e-9), (0.75, 1e-3), (0.8 + 2j, 1e-3)])
    def test_zeta_mpmath(self, s, tol):
        # below Re(s) = 1 this exercises the continuation against the known function
        r = l_eval(ZETA, s, tol=tol)
        assert abs(r.value - complex(mpmath.zeta(s))) <= r.error

    def test_zeta_region(self):
        with pytest.raises(DomainError):
            l_eval(ZETA, -0.1)

    def test_l2_at_two_telescopes(self):
        # 4(n + 3/2)/((n+1)^2 (n+2)^2) = 2/(n+1)^2 - 2/(n+2)^2, so L_2(2) = 2
        assert abs(l_eval(L2_SPEC, 2, tol=1e-12).value - 2) < 1e-11
        assert abs(mp_l2(2) - 2) < 1e-20

    @pytest.mark.parametrize("s", [2, 3, 2 + 1j, 1.5, 1.2 - 3j])
    def test_l2_against_mpmath(self, s):
        assert abs(l_eval(L2_SPEC, s, tol=1e-11).value - mp_l2(s)) < 1e-9

    @pytest.mark.parametrize("s", [2, 3, 2 + 1j, 1.5])
    def test_eval_against_direct(self, s):
        e = l_eval(L2_SPEC, s, tol=1e-10)
        d = l_direct(L2_SPEC, s, 10**6)
        assert abs(e.value - d.value) <= e.error + d.error

    def test_direct_tail_small(self):
        assert l_direct(L2_SPEC, 2, 10**6).error < 1e-6

    def test_direct_single_term(self):
        assert l_direct(L2_SPEC, 2, 1).value == 1.5
        spec = LSeriesSpec.from_poly(P("5,11,2"))
        assert l_direct(spec, 3, 1).value == pytest.approx(11 / 125, rel=1e-15)

    def test_other_quadratic(self):
        spec = LSeriesSpec.from_poly(P("5,11,2"))
        e = l_eval(spec, 3, tol=1e-12)
        d = l_direct(spec, 3, 10**5)
        assert abs(e.value - d.value) <= e.error + d.error

    def test_pole_residue(self):
        devs = []
        for k in (2, 3, 4):
            s = 1 + 10.0**-k
            r = l_eval(L2_SPEC, s, tol=1e-8)
            dev = abs((s - 1) * r.value - 1)
            assert dev <= 10 * 10.0**-k
            devs.append(dev)
        assert devs[0] > devs[1] > devs[2]

    def test_continuation_region(self):
        # left of 1 but right of 1 - 1/2; value is finite
        r = l_eval(L2_SPEC, 0.8, tol=1e-6)
        assert math.isfinite(r.value.real) and r.value.imag == 0

    def test_deterministic(self):
        a = l_eval(L2_SPEC, 1.5 + 2j, tol=1e-10)
        b = l_eval(L2_SPEC, 1.5 + 2j, tol=1e-10)
        assert a.value == b.value and a.terms == b.terms


class TestNumericErrors:
    def test_pole(self):
        with pytest.raises(DomainError):
            l_eval(L2_SPEC, 1)

    @pytest.mark.parametrize("s", [0.5, 0.3 + 1j, -2])
    def test_outside_region(self, s):
        with pytest.raises(DomainError):
            l_eval(L2_SPEC, s)

    def test_not_finite(self):
        with pytest.raises(DomainError):
            l_eval(L2_SPEC, float("nan"))

    def test_tolerance_not_reached(self):
        with pytest.raises(ToleranceNotReached) as info:
            l_eval(L2_SPEC, 0.6, tol=1e-12, max_terms=5000)
        res = info.value.result
        assert not res.converged and res.terms == 5000 and res.error > 1e-12

    @pytest.mark.parametrize("s", [1, 0.5, 1 + 5j])
    def test_direct_needs_convergence(self, s):
        with pytest.raises(DomainError):
            l_direct(L2_SPEC, s, 10)


def test_results_are_builtin_floats():
    for r in (l_eval(L2_SPEC, 2), l_direct(L2_SPEC, 2, terms=1000)):
        assert type(r.error) is float and type(r.value) is complex
