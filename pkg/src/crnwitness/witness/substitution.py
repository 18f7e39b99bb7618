"""Conservation-law substitution for rank-1 networks.

With one-dimensional stoichiometric subspace every reaction vector is a
multiple of a single direction, so after choosing a pivot species p with
nonzero entry each concentration is affine in x_p:

    x_j = mu_j * a + T_j,   mu_j = v_j / v_p,   a = x_p,   T_p = 0.

The pivot rate da/dt becomes a univariate polynomial F(a), linear in the
rate constants, and every other coordinate is mu_j * F(a).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from ..netparse import ReactionNetwork
from ..realroots import Interval, UniPoly
from ..structure import stoich_data

__all__ = [
    "ShapeError",
    "Substitution",
    "reaction_direction",
    "make_substitution",
    "window_of",
    "reaction_terms",
    "rate_polynomial",
    "substituted_polynomial",
    "mass_action_rhs",
    "back_substitute",
]


class ShapeError(ValueError):
    """The network does not have the shape a construction needs."""


@dataclass
class Substitution:
    pivot: str
    mu: dict[str, Fraction]
    totals: dict[str, Fraction]
    monomial: int = 0

    def coordinate(self, name: str) -> UniPoly:
        if name == self.pivot:
            return UniPoly([0, 1])
        return UniPoly([self.totals[name], self.mu[name]])

    def point(self, a) -> dict[str, Fraction]:
        a = Fraction(a)
        return {n: (a if n == self.pivot else self.mu[n] * a + self.totals[n]) for n in self.mu}


def reaction_direction(net: ReactionNetwork) -> tuple[int, ...]:
    """A nonzero reaction vector spanning the stoichiometric subspace."""
    if stoich_data(net).rank != 1:
        raise ShapeError("substitution needs a rank-1 network")
    for k in range(net.r):
        v = net.reaction_vector(k)
        if any(v):
            return v
    raise ShapeError("no nonzero reaction vector")  # pragma: no cover


def make_substitution(net: ReactionNetwork, totals: Mapping[str, Fraction] | None = None,
                      pivot: Optional[str] = None) -> Substitution:
    v = reaction_direction(net)
    names = net.species
    if pivot is None:
        pivot = next(n for n, x in zip(names, v) if x)
    if pivot not in names:
        raise ShapeError(f"unknown pivot species {pivot!r}")
    vp = v[names.index(pivot)]
    if vp == 0:
        raise ShapeError(f"pivot {pivot} has no net change")
    mu = {n: Fraction(x, vp) for n, x in zip(names, v)}
    totals = dict(totals or {})
    full = {}
    for n in names:
        if n == pivot:
            full[n] = Fraction(0)
        elif n not in totals:
            raise ShapeError(f"missing total for species {n}")
        else:
            full[n] = Fraction(totals[n])
    return Substitution(pivot, mu, full)


def window_of(sub: Substitution) -> Optional[Interval]:
    """The open set of a > 0 where every x_j is positive, or None if empty."""
    lo, hi = Fraction(0), None
    for n, m in sub.mu.items():
        if n == sub.pivot:
            continue
        t = sub.totals[n]
        if m == 0:
            if t <= 0:
                return None
        elif m > 0:
            lo = max(lo, -t / m)
        else:
            bound = t / -m
            hi = bound if hi is None else min(hi, bound)
    if hi is not None and hi <= lo:
        return None
    return Interval(lo, hi, True, True)


def reaction_terms(net: ReactionNetwork, sub: Substitution) -> list[UniPoly]:
    """phi_k(a) = v_{k,p} * prod_j x_j(a)^{y_kj}, so F = sum_k kappa_k phi_k."""
    p = net.species.index(sub.pivot)
    coords = [sub.coordinate(n) for n in net.species]
    out = []
    for k in range(net.r):
        term = UniPoly.const(net.reaction_vector(k)[p])
        for c, e in zip(coords, net.reactant_vector(k)):
            if e:
                term = term * c ** e
        out.append(term)
    return out


def rate_polynomial(net: ReactionNetwork, kappa: Sequence[Fraction], sub: Substitution) -> UniPoly:
    if len(kappa) != net.r:
        raise ShapeError(f"expected {net.r} rate constants, got {len(kappa)}")
    F = UniPoly()
    for kap, phi in zip(kappa, reaction_terms(net, sub)):
        F = F + phi * Fraction(kap)
    return F


def _shift_down(p: UniPoly, e: int) -> UniPoly:
    return UniPoly(p.coeffs[e:])


def substituted_polynomial(net: ReactionNetwork, kappa: Sequence[Fraction],
                           totals: Mapping[str, Fraction] | None = None,
                           pivot: Optional[str] = None) -> tuple[UniPoly, Interval, Substitution]:
    """Reduced steady-state polynomial, its admissible window and the record.

    The returned polynomial is F(a) / a^e with e the recorded monomial
    exponent; a^e is positive on the window so roots are unchanged.
    """
    kappa = [Fraction(k) for k in kappa]
    if any(k <= 0 for k in kappa):
        raise ShapeError("rate constants must be positive")
    sub = make_substitution(net, totals, pivot)
    window = window_of(sub)
    if window is None:
        raise ShapeError("totals leave no positive concentrations")
    F = rate_polynomial(net, kappa, sub)
    if F.is_zero():
        raise ShapeError("steady-state polynomial vanishes identically")
    sub.monomial = F.trailing_zeros()
    return _shift_down(F, sub.monomial), window, sub


def mass_action_rhs(net: ReactionNetwork, kappa: Sequence[Fraction], x: Mapping[str, Fraction]) -> dict[str, Fraction]:
    """dx/dt = sum_k kappa_k x^{y_k} (y'_k - y_k), evaluated exactly."""
    out = {n: Fraction(0) for n in net.species}
    for k in range(net.r):
        rate = Fraction(kappa[k])
        for n, e in zip(net.species, net.reactant_vector(k)):
            if e:
                rate *= Fraction(x[n]) ** e
        for n, d in zip(net.species, net.reaction_vector(k)):
            if d:
                out[n] += rate * d
    return out


def back_substitute(sub: Substitution, a) -> dict[str, Fraction]:
    return sub.point(a)
