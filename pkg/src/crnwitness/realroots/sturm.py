"""Sturm sequences, exact root counting and root isolation."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import _backend as K
from .poly import UniPoly, squarefree_decomposition

__all__ = [
    "Interval",
    "RootInterval",
    "RootReport",
    "StepBudgetExceeded",
    "sturm_chain",
    "sturm_count",
    "count_roots_squarefree",
    "cauchy_bound",
    "isolate_roots",
    "DEFAULT_WIDTH",
]

DEFAULT_WIDTH = Fraction(1, 2 ** 20)


class StepBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Interval:
    """Interval with exact endpoints; ``None`` stands for an infinite end."""

    lo: Optional[Fraction]
    hi: Optional[Fraction]
    lo_open: bool = True
    hi_open: bool = True

    def __post_init__(self):
        lo = None if self.lo is None else Fraction(self.lo)
        hi = None if self.hi is None else Fraction(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if lo is not None and hi is not None and not lo < hi:
            raise ValueError(f"empty interval ({lo}, {hi})")

    @classmethod
    def open(cls, lo, hi) -> "Interval":
        return cls(lo, hi, True, True)

    def contains(self, x) -> bool:
        x = Fraction(x)
        if self.lo is not None and (x < self.lo or (self.lo_open and x == self.lo)):
            return False
        if self.hi is not None and (x > self.hi or (self.hi_open and x == self.hi)):
            return False
        return True

    def contains_interval(self, lo, hi) -> bool:
        """Is the closed interval [lo, hi] inside this one?"""
        return self.contains(lo) and self.contains(hi)

    def __str__(self):
        lb = "(" if self.lo_open else "["
        rb = ")" if self.hi_open else "]"
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "inf" if self.hi is None else str(self.hi)
        return f"{lb}{lo}, {hi}{rb}"


@dataclass(frozen=True)
class RootInterval:
    """One distinct real root: inside (lo, hi), or exactly ``exact`` if known."""

    lo: Fraction
    hi: Fraction
    multiplicity: int
    exact: Optional[Fraction] = None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        x = Fraction(x)
        if self.exact is not None:
            return x == self.exact
        return self.lo < x < self.hi


@dataclass
class RootReport:
    isolated: list[RootInterval] = field(default_factory=list)

    @property
    def total_in_window(self) -> int:
        return len(self.isolated)

    @property
    def simple_in_window(self) -> int:
        return sum(1 for r in self.isolated if r.multiplicity == 1)

    @property
    def simple(self) -> list[RootInterval]:
        return [r for r in self.isolated if r.multiplicity == 1]


# --------------------------------------------------------------------------- Sturm machinery


def sturm_chain(p: UniPoly | list[int]) -> list[list[int]]:
    """Sturm chain of p as primitive integer polynomials (positive rescalings)."""
    q = p.to_integer() if isinstance(p, UniPoly) else K.primitive(list(p))
    if not q:
        raise ZeroDivisionError("Sturm chain of the zero polynomial")
    chain = [q]
    if len(q) == 1:
        return chain
    dq = K.primitive([i * c for i, c in enumerate(q)][1:])
    chain.append(dq)
    while len(chain[-1]) > 1:
        r = K.prem_pos(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _var(chain, x: Optional[Fraction], direction: int) -> int:
    if x is None:
        return K.variations_inf(chain, direction)
    x = Fraction(x)
    return K.variations(chain, x.numerator, x.denominator)


def _sign(p_int: list[int], x: Fraction) -> int:
    return K.sign_at(p_int, x.numerator, x.denominator)


def cauchy_bound(p: UniPoly) -> Fraction:
    """Every complex root z of p satisfies |z| < bound."""
    if p.degree < 1:
        return Fraction(1)
    lc = p.lc
    return 1 + max(abs(c / lc) for c in p.coeffs[:-1])


def _strip_endpoint_roots(q: UniPoly, iv: Interval) -> tuple[UniPoly, int]:
    """Divide out exact roots sitting on the endpoints of iv.

    Returns the reduced polynomial and the number of removed roots that lie
    inside iv (closed ends).
    """
    extra = 0
    for e, is_open in ((iv.lo, iv.lo_open), (iv.hi, iv.hi_open)):
        if e is not None and q.degree >= 1 and q(e) == 0:
            q = q // UniPoly([-e, 1])
            if not is_open:
                extra += 1
    return q, extra


def count_roots_squarefree(q: UniPoly, iv: Interval) -> int:
    """Distinct roots of a square-free q in iv, respecting open/closed ends."""
    if q.is_zero():
        raise ZeroDivisionError("root count of the zero polynomial")
    q, extra = _strip_endpoint_roots(q, iv)
    if q.degree < 1:
        return extra
    chain = sturm_chain(q)
    return _var(chain, iv.lo, -1) - _var(chain, iv.hi, 1) + extra


def sturm_count(p: UniPoly, iv: Interval) -> int:
    """Number of distinct real roots of p in iv."""
    if p.is_zero():
        raise ZeroDivisionError("root count of the zero polynomial")
    if p.degree < 1:
        return 0
    return count_roots_squarefree(p.squarefree_part(), iv)


# --------------------------------------------------------------------------- isolation


class _Budget:
    def __init__(self, steps: Optional[int]):
        self.left = steps

    def tick(self):
        if self.left is not None:
            self.left -= 1
            if self.left < 0:
                raise StepBudgetExceeded("root isolation step budget exhausted")


def _split_point(f_int, a: Fraction, b: Fraction) -> Fraction:
    m = (a + b) / 2
    k = 3
    while _sign(f_int, m) == 0:
        m = (a + b) / 2 + (b - a) / 2 ** k
        k += 1
    return m


def _isolate_squarefree(f: UniPoly, lo: Fraction, hi: Fraction, budget: _Budget):
    """Isolating intervals (a, b) of the roots of square-free f in (lo, hi).

    f must not vanish at lo or hi.
    """
    f_int = f.to_integer()
    chain = sturm_chain(f_int)
    out = []
    stack = [(lo, hi, _var(chain, lo, -1), _var(chain, hi, 1))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        budget.tick()
        m = _split_point(f_int, a, b)
        vm = _var(chain, m, 1)
        stack.append((m, b, vm, vb))
        stack.append((a, m, va, vm))
    out.sort()
    return f_int, out


def simplest_between(a: Fraction, b: Fraction) -> Fraction:
    """Rational with the smallest denominator in the open interval (a, b)."""
    if not a < b:
        raise ValueError("empty interval")
    if a < 0 < b:
        return Fraction(0)
    if b <= 0:
        return -simplest_between(-b, -a)
    fl = a.numerator // a.denominator
    if fl + 1 < b:
        return Fraction(fl + 1)
    lo, hi = a - fl, b - fl  # 0 <= lo < hi <= 1
    if lo == 0:
        return fl + Fraction(1, int(1 / hi) + 1)
    return fl + 1 / simplest_between(1 / hi, 1 / lo)


def _refine(f_int, a: Fraction, b: Fraction, width: Fraction, budget: _Budget):
    """Shrink (a, b) around its single simple root of f; returns (a, b, exact)."""
    sa = _sign(f_int, a)
    while b - a > width:
        budget.tick()
        m = (a + b) / 2
        sm = _sign(f_int, m)
        if sm == 0:
            delta = min(width, b - a) / 4
            return m - delta, m + delta, m
        if sm == sa:
            a = m
        else:
            b = m
    return a, b, None


def isolate_roots(p: UniPoly, iv: Interval | None = None, width: Fraction | None = DEFAULT_WIDTH,
                  max_steps: int | None = None) -> RootReport:
    """Isolate the distinct real roots of p inside iv, with multiplicities.

    Roots are found per square-free factor of Yun's decomposition, so the
    factor index is the multiplicity.  Each isolating interval is refined to
    ``width`` (``None`` skips refinement).  Rational roots met exactly during
    bisection are reported in ``exact``.
    """
    if p.is_zero():
        raise ZeroDivisionError("cannot isolate roots of the zero polynomial")
    iv = iv or Interval(None, None)
    budget = _Budget(max_steps)
    report = RootReport()
    if p.degree < 1:
        return report
    bound = cauchy_bound(p)
    lo = -bound if iv.lo is None else iv.lo
    hi = bound if iv.hi is None else iv.hi

    found = []  # (lo, hi, mult, exact, f_int)
    for f, mult in squarefree_decomposition(p):
        g = f
        for e, is_open in ((iv.lo, iv.lo_open), (iv.hi, iv.hi_open)):
            if e is not None and g.degree >= 1 and g(e) == 0:
                g = g // UniPoly([-e, 1])
                if not is_open:
                    found.append((e, e, mult, e, None))
        if g.degree < 1:
            continue
        if g.degree == 1:
            r = -g.coeffs[0] / g.coeffs[1]
            if lo < r < hi:
                delta = min(width or Fraction(1), r - lo, hi - r) / 4
                found.append((r - delta, r + delta, mult, r, None))
            continue
        f_int, ivs = _isolate_squarefree(g, lo, hi, budget)
        for a, b in ivs:
            found.append((a, b, mult, None, f_int))

    found.sort(key=lambda t: (t[0], t[1]))
    # intervals from different factors may overlap; shrink until disjoint
    changed = True
    while changed:
        changed = False
        for i in range(len(found) - 1):
            a1, b1, m1, e1, f1 = found[i]
            a2, b2, m2, e2, f2 = found[i + 1]
            if b1 > a2:
                budget.tick()
                found[i] = _shrink(found[i], budget)
                found[i + 1] = _shrink(found[i + 1], budget)
                found.sort(key=lambda t: (t[0], t[1]))
                changed = True
                break

    for a, b, mult, exact, f_int in found:
        if width is not None and exact is None and b - a > width:
            a, b, exact = _refine(f_int, a, b, width, budget)
        if exact is None and f_int is not None:
            q = simplest_between(a, b)
            if _sign(f_int, q) == 0:
                exact = q
        report.isolated.append(RootInterval(a, b, mult, exact))
    return report


def _shrink(entry, budget):
    a, b, mult, exact, f_int = entry
    if exact is not None:
        delta = (b - a) / 4
        return (exact - delta, exact + delta, mult, exact, None)
    a2, b2, ex = _refine(f_int, a, b, (b - a) / 2, budget)
    return (a2, b2, mult, ex, f_int)
