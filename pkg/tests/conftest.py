from fractions import Fraction

from hypothesis import strategies as st

from rbmoments.poly import Poly

BOUND = 10**6

rats = st.builds(
    Fraction,
    st.integers(-BOUND, BOUND),
    st.integers(1, BOUND),
)
small_rats = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))


def polys(max_degree=4, coeffs=rats):
    return st.lists(coeffs, max_size=max_degree + 1).map(Poly)


def P(text):
    return Poly.parse(text)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for key in sorted(lines):
            terminalreporter.write_line(lines[key])
