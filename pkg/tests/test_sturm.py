from fractions import Fraction as F
import random

import pytest
import sympy
from hypothesis import given, strategies as st

from crnwitness.realroots import (
    Interval,
    StepBudgetExceeded,
    UniPoly,
    count_roots_squarefree,
    isolate_roots,
    sturm_chain,
    sturm_count,
)
from crnwitness.realroots.sturm import simplest_between


def remark_quartic():
    return UniPoly.from_roots([3, 3, 2, 1])


def test_count_cubic_on_subinterval():
    p = UniPoly.from_roots([1, 2, 3])
    assert sturm_count(p, Interval.open(0, F(5, 2))) == 2


def test_count_no_real_roots():
    assert sturm_count(UniPoly([1, 0, 1]), Interval.open(-10, 10)) == 0


def test_count_squarefree_part_of_quartic():
    p = remark_quartic().squarefree_part()
    assert sturm_count(p, Interval.open(0, 3)) == 2


def test_endpoint_roots_are_handled():
    p = UniPoly.from_roots([0, 1, 2])
    assert sturm_count(p, Interval.open(0, 2)) == 1
    assert sturm_count(p, Interval(0, 2, False, False)) == 3
    assert count_roots_squarefree(p, Interval(0, 1, True, False)) == 1


def test_unbounded_interval():
    p = UniPoly.from_roots([-5, 1, 7])
    assert sturm_count(p, Interval(None, None)) == 3
    assert sturm_count(p, Interval(0, None, True, True)) == 2


def test_isolate_double_and_simple():
    rep = isolate_roots(UniPoly.from_roots([1, 1, 2]), Interval.open(0, 3))
    assert [(r.exact, r.multiplicity) for r in rep.isolated] == [(1, 2), (2, 1)]
    assert rep.total_in_window == 2 and rep.simple_in_window == 1


def test_isolate_remark_quartic():
    rep = isolate_roots(remark_quartic(), Interval.open(0, 3))
    assert [r.multiplicity for r in rep.isolated] == [1, 1]
    assert rep.isolated[0].lo < 1 < rep.isolated[0].hi or rep.isolated[0].exact == 1
    assert rep.isolated[1].contains(2)


def test_isolate_constant_is_empty():
    assert isolate_roots(UniPoly([1])).isolated == []


def test_irrational_roots_refined():
    rep = isolate_roots(UniPoly([-2, 0, 1]), Interval.open(0, 2), width=F(1, 2 ** 30))
    (r,) = rep.isolated
    assert r.exact is None
    assert r.hi - r.lo <= F(1, 2 ** 30)
    assert r.lo ** 2 < 2 < r.hi ** 2


def test_step_budget():
    p = UniPoly.from_roots([F(1, 10 ** 6), F(2, 10 ** 6), F(3, 10 ** 6)])
    with pytest.raises(StepBudgetExceeded):
        isolate_roots(p, max_steps=3)


def test_simplest_between():
    assert simplest_between(F(349525, 1048576), F(349526, 1048576)) == F(1, 3)
    assert simplest_between(F(0), F(1, 3)) == F(1, 4)
    assert simplest_between(F(-1, 2), F(-1, 3)) == F(-2, 5)
    assert simplest_between(F(-1), F(1)) == 0


def test_sturm_chain_starts_with_p_and_derivative():
    p = UniPoly.from_roots([1, 2, 3])
    chain = sturm_chain(p)
    assert len(chain) >= 2


def _naive_count(p: UniPoly, lo: F, hi: F) -> int:
    """Sign changes on a fine grid; exact for well-separated simple roots."""
    n = 2 ** 10
    vals = [p(lo + (hi - lo) * F(i, n)) for i in range(n + 1)]
    nz = [v for v in vals if v != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if (a > 0) != (b > 0))


@given(st.lists(st.integers(-8, 8), min_size=3, max_size=3, unique=True), st.integers(1, 4))
def test_sturm_matches_naive_on_random_cubics(roots, lead):
    p = UniPoly.from_roots([F(r, 2) for r in roots], lead=lead)
    iv = Interval.open(F(-9, 2) + F(1, 7), F(9, 2) - F(1, 7))
    assert sturm_count(p, iv) == _naive_count(p, iv.lo, iv.hi)


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=4), st.integers(-3, 3), st.integers(1, 3))
def test_random_cubic_and_quartic_roots_match_sympy(coeffs, c0, lead):
    p = UniPoly([c0] + coeffs + [lead])
    x = sympy.Symbol("x")
    sp = sum(c * x ** i for i, c in enumerate(p.coeffs))
    real = sympy.Poly(sp, x).real_roots()
    distinct = sorted(set(real), key=lambda r: float(r))
    rep = isolate_roots(p)
    assert len(rep.isolated) == len(distinct)
    for r, s in zip(rep.isolated, distinct):
        assert r.multiplicity == real.count(s)
        assert r.lo <= float(s) <= r.hi or r.contains(F(str(s)) if s.is_Rational else 0)


def test_factored_products_recover_roots():
    rng = random.Random(12345)
    for _ in range(60):
        k = rng.randint(1, 4)
        roots = set()
        while len(roots) < k:
            roots.add(F(rng.randint(-40, 40), rng.randint(1, 9)))
        mults = {r: rng.randint(1, 3) for r in roots}
        p = UniPoly.from_roots([r for r, m in mults.items() for _ in range(m)], lead=rng.randint(1, 5))
        rep = isolate_roots(p)
        assert len(rep.isolated) == len(roots)
        for iv, r in zip(rep.isolated, sorted(roots)):
            assert iv.exact == r
            assert iv.multiplicity == mults[r]
