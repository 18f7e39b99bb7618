"""The three-parameter family

    g(z) = (T - mu z)^n2 - l z^p1 (T - mu z)^n1 + m z^p2,

with mu, T, l, m > 0, 1 <= p1 < p2 and 0 <= n1 < n2, together with the
root-preserving perturbation used to make a multiple root simple.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb
from typing import Optional

from .poly import UniPoly
from .sturm import Interval, RootReport, isolate_roots

__all__ = [
    "GFamily",
    "GFamilyError",
    "SplitBudgetExceeded",
    "gfamily_expand",
    "gfamily_perturb",
    "perturbation_slope",
    "make_simple",
    "split_multiplicities",
    "normalize_mu",
    "double_root_family",
]


class GFamilyError(ValueError):
    pass


class SplitBudgetExceeded(RuntimeError):
    def __init__(self, message, best: "GFamily" = None, simple: int = 0):
        super().__init__(message)
        self.best = best
        self.simple = simple


@dataclass(frozen=True)
class GFamily:
    mu: Fraction
    T: Fraction
    l: Fraction
    m: Fraction
    p1: int
    p2: int
    n1: int
    n2: int

    def __post_init__(self):
        for name in ("mu", "T", "l", "m"):
            v = Fraction(getattr(self, name))
            object.__setattr__(self, name, v)
            if v <= 0:
                raise GFamilyError(f"{name} must be positive, got {v}")
        if not 1 <= self.p1 < self.p2:
            raise GFamilyError(f"need 1 <= p1 < p2, got p1={self.p1}, p2={self.p2}")
        if not 0 <= self.n1 < self.n2:
            raise GFamilyError(f"need 0 <= n1 < n2, got n1={self.n1}, n2={self.n2}")

    @property
    def degree_bound(self) -> int:
        return max(self.n2, self.n1 + self.p1, self.p2)

    @property
    def window(self) -> Interval:
        return Interval.open(0, self.T / self.mu)

    def expand(self) -> UniPoly:
        return gfamily_expand(self)

    def __call__(self, z) -> Fraction:
        z = Fraction(z)
        t = self.T - self.mu * z
        return t ** self.n2 - self.l * z ** self.p1 * t ** self.n1 + self.m * z ** self.p2

    def derivative_at(self, z) -> Fraction:
        z = Fraction(z)
        t = self.T - self.mu * z
        mu, p1, p2, n1, n2 = self.mu, self.p1, self.p2, self.n1, self.n2
        d_first = -n2 * mu * t ** (n2 - 1)
        d_mid = p1 * z ** (p1 - 1) * t ** n1
        if n1:
            d_mid -= n1 * mu * z ** p1 * t ** (n1 - 1)
        return d_first - self.l * d_mid + p2 * self.m * z ** (p2 - 1)


def _binomial_power(T: Fraction, mu: Fraction, n: int) -> list[Fraction]:
    """Coefficients of (T - mu z)^n."""
    return [comb(n, k) * T ** (n - k) * (-mu) ** k for k in range(n + 1)]


def gfamily_expand(gf: GFamily) -> UniPoly:
    d = gf.degree_bound
    c = [Fraction(0)] * (d + 1)
    for k, b in enumerate(_binomial_power(gf.T, gf.mu, gf.n2)):
        c[k] += b
    for k, b in enumerate(_binomial_power(gf.T, gf.mu, gf.n1)):
        c[k + gf.p1] -= gf.l * b
    c[gf.p2] += gf.m
    return UniPoly(c)


def normalize_mu(gf: GFamily) -> GFamily:
    """Equivalent family with mu = 1.

    g_mu(w / mu) is the mu = 1 family with l / mu^p1 and m / mu^p2, so a
    root z of the original corresponds to the root mu*z of the result.
    """
    mu = gf.mu
    return replace(gf, mu=Fraction(1), l=gf.l / mu ** gf.p1, m=gf.m / mu ** gf.p2)


def gfamily_perturb(gf: GFamily, b, lam) -> GFamily:
    """Move (l, m) along the line of families that keep b as a root.

    The perturbed family is (T, l + lam*b^p2, m + lam*(T - mu*b)^n1*b^p1);
    for mu = 1 this is exactly the line through g with the same root b.
    """
    b = Fraction(b)
    lam = Fraction(lam)
    if gf(b) != 0:
        raise GFamilyError(f"{b} is not a root of the family")
    if lam == 0:
        return gf
    l_new = gf.l + lam * b ** gf.p2
    m_new = gf.m + lam * (gf.T - gf.mu * b) ** gf.n1 * b ** gf.p1
    if l_new <= 0 or m_new <= 0:
        raise GFamilyError("perturbation leaves the positive parameter region; shrink |lambda|")
    return replace(gf, l=l_new, m=m_new)


def perturbation_slope(gf: GFamily, b) -> Fraction:
    """d/d(lambda) of g~'(b) along the root-preserving line.

    Closed form: b^(p1+p2-1) (T - mu b)^(n1-1) [(p2 - p1)(T - mu b) + mu n1 b],
    strictly positive on 0 < b < T/mu.  At mu = 1 the bracket is the negated
    difference of the two sides of (p1 - p2)(T - b) = b n1, which therefore
    never holds there.
    """
    b = Fraction(b)
    t = gf.T - gf.mu * b
    return b ** (gf.p1 + gf.p2 - 1) * t ** (gf.n1 - 1) * ((gf.p2 - gf.p1) * t + gf.mu * gf.n1 * b)


def make_simple(gf: GFamily, b, eps: Optional[Fraction] = None, max_k: int = 200) -> tuple[GFamily, Fraction]:
    """Perturb so that the root b becomes simple; returns (family, lambda).

    Searches lambda = +-1/2^k for k = 0, 1, ... and returns the first with
    positive parameters, g~'(b) != 0 and coefficient distance below eps.
    """
    b = Fraction(b)
    if not 0 < b < gf.T / gf.mu:
        raise GFamilyError(f"b={b} is outside (0, T/mu)")
    if gf(b) != 0:
        raise GFamilyError(f"{b} is not a root of the family")
    if gf.derivative_at(b) != 0:
        return gf, Fraction(0)
    base = gf.expand()
    eps_sq = None if eps is None else Fraction(eps) ** 2
    for k in range(max_k):
        for sign in (1, -1):
            lam = Fraction(sign, 2 ** k)
            try:
                cand = gfamily_perturb(gf, b, lam)
            except GFamilyError:
                continue
            if cand.derivative_at(b) == 0:
                continue
            if eps_sq is not None and cand.expand().coefficient_distance_sq(base) >= eps_sq:
                continue
            return cand, lam
    raise GFamilyError("no admissible lambda found")  # unreachable for valid input


def _rational_root_in(f: UniPoly, lo: Fraction, hi: Fraction) -> Optional[Fraction]:
    """Exact rational root of f strictly between lo and hi, if any."""
    if f.degree == 1:
        r = -f.coeffs[0] / f.coeffs[1]
        return r if lo < r < hi else None
    ints = f.to_integer()
    a0, an = ints[0], ints[-1]
    if a0 == 0:
        return Fraction(0) if lo < 0 < hi else None
    if abs(a0) > 10 ** 6 or abs(an) > 10 ** 6:
        return None
    nums = [d for d in range(1, abs(a0) + 1) if a0 % d == 0]
    dens = [d for d in range(1, abs(an) + 1) if an % d == 0]
    for p in nums:
        for q in dens:
            for r in (Fraction(p, q), Fraction(-p, q)):
                if lo < r < hi and f(r) == 0:
                    return r
    return None


def _report(gf: GFamily) -> RootReport:
    return isolate_roots(gf.expand(), gf.window)


def split_multiplicities(gf: GFamily, max_steps: int = 64) -> GFamily:
    """Perturb a family with >= 2 distinct roots in (0, T/mu) until it has
    >= 2 simple roots there.

    A multiple root is made simple by :func:`make_simple` when it is rational;
    otherwise the same root-preserving direction is taken at the midpoint of
    its isolating interval.  Step sizes shrink dyadically, and a step is kept
    only if it does not lose distinct roots, which is the exact counterpart
    of keeping the perturbation inside the separation radius of the roots.
    """
    report = _report(gf)
    if report.total_in_window < 2:
        raise GFamilyError("need at least two distinct roots in (0, T/mu)")
    if report.simple_in_window >= 2:
        return gf
    current, cur_report = gf, report
    for _ in range(max_steps):
        multiple = [r for r in cur_report.isolated if r.multiplicity > 1]
        target = multiple[0]
        # prefer an even-multiplicity root: splitting it cannot lose the root
        evens = [r for r in multiple if r.multiplicity % 2 == 0]
        if evens:
            target = evens[0]
        b = target.exact
        if b is None:
            poly = current.expand()
            f = poly.gcd(poly.derivative())
            b = _rational_root_in(f, target.lo, target.hi)
        progressed = False
        for k in range(0, 60):
            for sign in (1, -1):
                lam = Fraction(sign, 2 ** k)
                try:
                    if b is not None:
                        cand = gfamily_perturb(current, b, lam)
                    else:
                        mid = (target.lo + target.hi) / 2
                        t = current.T - current.mu * mid
                        cand = replace(current, l=current.l + lam * mid ** current.p2,
                                       m=current.m + lam * t ** current.n1 * mid ** current.p1)
                except GFamilyError:
                    continue
                rep = _report(cand)
                if rep.simple_in_window > cur_report.simple_in_window and \
                        rep.total_in_window >= cur_report.total_in_window:
                    current, cur_report = cand, rep
                    progressed = True
                    break
            if progressed:
                break
        if not progressed:
            break
        if cur_report.simple_in_window >= 2:
            return current
    raise SplitBudgetExceeded("could not split multiple roots within budget",
                              best=current, simple=cur_report.simple_in_window)


def double_root_family(b, T, mu, p1, p2, n1, n2) -> Optional[GFamily]:
    """Family with a double root at b: solve g(b) = g'(b) = 0 for (l, m).

    Returns None when the unique solution is not positive.
    """
    b, T, mu = Fraction(b), Fraction(T), Fraction(mu)
    t = T - mu * b
    # g(b)  = t^n2 - l*A + m*B,   g'(b) = C - l*D + m*E
    A = b ** p1 * t ** n1
    B = b ** p2
    C = -n2 * mu * t ** (n2 - 1)
    D = p1 * b ** (p1 - 1) * t ** n1 - (n1 * mu * b ** p1 * t ** (n1 - 1) if n1 else 0)
    E = p2 * b ** (p2 - 1)
    # l*A - m*B = t^n2 ; l*D - m*E = C
    det = -A * E + B * D
    if det == 0:
        return None
    l = (t ** n2 * (-E) + B * C) / det
    m = (A * C - D * t ** n2) / det
    if l <= 0 or m <= 0:
        return None
    return GFamily(mu, T, l, m, p1, p2, n1, n2)
