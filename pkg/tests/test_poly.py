from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, strategies as st

from crnwitness.realroots import (
    UniPoly,
    format_rational,
    parse_rational,
    squarefree_decomposition,
)

z = sympy.Symbol("z")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.lists(rationals, min_size=1, max_size=6).map(UniPoly)


def to_sympy(p: UniPoly):
    return sympy.S(sum(sympy.Rational(c.numerator, c.denominator) * z ** i for i, c in enumerate(p.coeffs)))


def test_trailing_zeros_stripped():
    assert list(UniPoly([1, 2, 0, 0]).coeffs) == [1, 2]
    assert UniPoly([0, 0]).is_zero() and UniPoly().degree == -1


def test_derivative_of_square():
    # d/dz (1 - z)^2 = 2z - 2
    assert (UniPoly([1, -1]) ** 2).derivative() == UniPoly([-2, 2])


def test_gcd_monic():
    a = UniPoly.from_roots([1, 1, 2])
    b = UniPoly.from_roots([1, 3])
    assert a.gcd(b) == UniPoly([-1, 1])
    assert UniPoly([2, 4]).gcd(UniPoly([4, 8])) == UniPoly([F(1, 2), 1])


def test_squarefree_part():
    p = UniPoly.from_roots([1, 1, 2])
    q = p.squarefree_part()
    assert q.monic() == UniPoly.from_roots([1, 2])


def test_yun_decomposition():
    p = UniPoly.from_roots([1, 2, 2, 3, 3, 3], lead=5)
    parts = {m: f.monic() for f, m in squarefree_decomposition(p)}
    assert parts[1] == UniPoly.from_roots([1])
    assert parts[2] == UniPoly.from_roots([2])
    assert parts[3] == UniPoly.from_roots([3])


def test_compose_linear():
    p = UniPoly([0, 0, 1])  # z^2
    assert p.compose_linear(2, 1) == UniPoly([1, 4, 4])


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        UniPoly([1, 1]).divmod(UniPoly())


def test_rational_text():
    assert format_rational(F(3, 4)) == "3/4"
    assert format_rational(F(2)) == "2/1"
    assert parse_rational("-7/3") == F(-7, 3)
    assert parse_rational("5") == F(5)
    with pytest.raises(ValueError):
        parse_rational("1/0")


@given(polys, polys)
def test_arithmetic_matches_sympy(p, q):
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0
    assert sympy.expand(to_sympy(p + q) - to_sympy(p) - to_sympy(q)) == 0
    assert sympy.expand(to_sympy(p.derivative()) - sympy.diff(to_sympy(p), z)) == 0


@given(polys, polys)
def test_divmod_identity(p, q):
    if q.is_zero():
        return
    quo, rem = p.divmod(q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


@given(polys, polys)
def test_gcd_matches_sympy(p, q):
    if p.is_zero() and q.is_zero():
        return
    g = p.gcd(q)
    expected = sympy.Poly(sympy.gcd(to_sympy(p), to_sympy(q)), z)
    if expected.degree() <= 0:
        assert g.degree == 0
    else:
        assert sympy.expand(to_sympy(g) - expected.monic().as_expr()) == 0


@given(polys, rationals)
def test_evaluation(p, x):
    assert p(x) == to_sympy(p).subs(z, sympy.Rational(x.numerator, x.denominator))
