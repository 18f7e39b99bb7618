"""Witness constructions.

Each construction proposes rate constants and totals, builds the reduced
polynomial with :func:`substituted_polynomial`, isolates its roots and only
returns a certificate after :func:`verify_certificate` has accepted it.
Candidates are enumerated in a fixed order, so results are reproducible and
a budget (number of candidates) is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterator, Optional, Sequence

from ..netparse import ReactionNetwork
from ..realroots import (
    GFamily,
    GFamilyError,
    Interval,
    SplitBudgetExceeded,
    UniPoly,
    isolate_roots,
    split_multiplicities,
)
from ..structure import species_embedding, is_T_alternating, stoich_data, same_stoichiometric_subspace
from .certificate import WitnessCertificate
from .substitution import (
    ShapeError,
    make_substitution,
    reaction_direction,
    reaction_terms,
    substituted_polynomial,
    window_of,
)
from .verify import verify_certificate

__all__ = [
    "DEFAULT_BUDGET",
    "Budget",
    "BudgetExhausted",
    "PairIrrevFrame",
    "theorem35_frames",
    "certify",
    "extend_certificate",
    "witness_three_term",
    "witness_one_species",
    "witness_positive_slope",
    "witness_slope_minus_one",
    "witness_negative_slope",
    "witness_zigzag_lift",
    "witness_theorem35",
    "witness_generic",
    "root_pair_schedule",
    "totals_schedule",
]

DEFAULT_BUDGET = 2000


class BudgetExhausted(RuntimeError):
    def __init__(self, message="witness search budget exhausted", best: int = 0):
        super().__init__(message)
        self.best = best


class Budget:
    """Counts candidate parameter points; shared by nested constructions."""

    def __init__(self, limit: Optional[int] = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0
        self.best = 0

    def take(self):
        if self.limit is not None and self.used >= self.limit:
            raise BudgetExhausted(best=self.best)
        self.used += 1

    def note(self, roots: int):
        self.best = max(self.best, roots)

    @property
    def exhausted(self) -> bool:
        return self.limit is not None and self.used >= self.limit

    @property
    def remaining(self) -> Optional[int]:
        return None if self.limit is None else max(self.limit - self.used, 0)

    def child(self, share: int) -> "Budget":
        """Sub-budget of at most ``share`` candidates; settle with :meth:`charge`."""
        rem = self.remaining
        return Budget(share if rem is None else min(share, rem))

    def charge(self, child: "Budget"):
        self.used += child.used
        self.best = max(self.best, child.best)


def _share(budget: Budget, parts: int, unlimited: int = 500) -> int:
    rem = budget.remaining
    return unlimited if rem is None else max(1, rem // parts)


def _budget(b) -> Budget:
    if isinstance(b, Budget):
        return b
    return Budget(b)


# --------------------------------------------------------------------------- certification


def certify(net: ReactionNetwork, kappa: Sequence, totals=None, pivot: Optional[str] = None,
            construction: str = "", notes=(), budget: Optional[Budget] = None) -> Optional[WitnessCertificate]:
    """Certificate for (kappa, totals) if it has >= 2 simple roots and verifies."""
    try:
        poly, window, sub = substituted_polynomial(net, kappa, totals, pivot)
    except ShapeError:
        return None
    report = isolate_roots(poly, window)
    if budget is not None:
        budget.note(report.total_in_window)
    simple = report.simple
    if len(simple) < 2:
        return None
    cert = WitnessCertificate.build(net, kappa, sub, poly, window, simple, construction, notes)
    if not verify_certificate(net, cert):
        return None
    return cert


def extend_certificate(net: ReactionNetwork, sub_cert: WitnessCertificate, max_halvings: int = 60,
                       construction: Optional[str] = None) -> Optional[WitnessCertificate]:
    """Lift a certificate of a subnetwork with the same stoichiometric
    subspace: dropped reactions get a small rate eps, halved until the
    extended parameters verify on the full network."""
    by_rx = sub_cert.kappa_by_reaction()
    missing = [k for k, rx in enumerate(net.reactions) if str(rx) not in by_rx]
    if not missing:
        kappa = [by_rx[str(rx)] for rx in net.reactions]
        return certify(net, kappa, _non_pivot(sub_cert), sub_cert.substitution.pivot,
                       construction or sub_cert.construction, sub_cert.notes)
    eps = min(sub_cert.kappa) / 16
    totals = _non_pivot(sub_cert)
    label = construction or f"{sub_cert.construction}+extension"
    for _ in range(max_halvings):
        kappa = [by_rx.get(str(rx), eps) for rx in net.reactions]
        note = f"subnetwork certificate ({sub_cert.network}) extended with rate {eps} on " + \
               ", ".join(str(net.reactions[k]) for k in missing)
        cert = certify(net, kappa, totals, sub_cert.substitution.pivot, label, list(sub_cert.notes) + [note])
        if cert is not None:
            return cert
        eps /= 2
    return None


def _non_pivot(cert: WitnessCertificate) -> dict:
    sub = cert.substitution
    return {n: t for n, t in sub.totals.items() if n != sub.pivot}


# --------------------------------------------------------------------------- three-term monomial case


def _solve_two_roots(d1: int, d2: int, r1: Fraction, r2: Fraction) -> tuple[Fraction, Fraction]:
    """(l, m) with 1 - l r^d1 + m r^d2 = 0 at r1 and r2."""
    a11, a12 = r1 ** d1, -(r1 ** d2)
    a21, a22 = r2 ** d1, -(r2 ** d2)
    det = a11 * a22 - a12 * a21
    l = (a22 - a12) / det
    m = (a11 - a21) / det
    return l, m


MONOMIAL_ROOTS = [(Fraction(1), Fraction(2)), (Fraction(1, 2), Fraction(1)), (Fraction(1), Fraction(3)),
                  (Fraction(1, 2), Fraction(2)), (Fraction(1, 3), Fraction(1))]


def witness_three_term(net: ReactionNetwork, indices: Sequence[int], totals=None, pivot=None,
                       construction="three-term", budget=None) -> WitnessCertificate:
    """Three reactions whose terms become monomials c_k a^e_k with distinct
    exponents and alternating signs.  Prescribing two roots gives
    +-(1 - l a^d1 + m a^d2) with l, m > 0 (Descartes' bound is met)."""
    budget = _budget(budget)
    sub_net = net.subnetwork(indices)
    sub = make_substitution(sub_net, totals, pivot)
    terms = []
    for k, phi in enumerate(reaction_terms(sub_net, sub)):
        nz = [(e, c) for e, c in enumerate(phi.coeffs) if c]
        if len(nz) != 1:
            raise ShapeError("substituted reaction term is not a monomial")
        terms.append((nz[0][0], nz[0][1], k))
    terms.sort()
    exps = [t[0] for t in terms]
    if len(set(exps)) != 3:
        raise ShapeError("monomial exponents are not distinct")
    signs = [1 if t[1] > 0 else -1 for t in terms]
    if not (signs[0] == signs[2] == -signs[1]):
        raise ShapeError("monomial signs do not alternate")
    d1, d2 = exps[1] - exps[0], exps[2] - exps[0]
    for r1, r2 in MONOMIAL_ROOTS:
        budget.take()
        l, m = _solve_two_roots(d1, d2, r1, r2)
        if l <= 0 or m <= 0:  # cannot happen for 0 < r1 < r2, kept as a guard
            continue
        kap = [Fraction(0)] * 3
        kap[terms[0][2]] = 1 / abs(terms[0][1])
        kap[terms[1][2]] = l / abs(terms[1][1])
        kap[terms[2][2]] = m / abs(terms[2][1])
        note = f"1 - l a^{d1} + m a^{d2} with l={l}, m={m}; prescribed roots {r1}, {r2}"
        cert = certify(sub_net, kap, totals, sub.pivot, construction, [note], budget)
        if cert is not None:
            return cert if sub_net.r == net.r else _extend_or_fail(net, cert)
    raise BudgetExhausted(best=budget.best)


def _extend_or_fail(net, cert):
    out = extend_certificate(net, cert)
    if out is None:
        raise ShapeError("extension of the subnetwork certificate failed")
    return out


def witness_one_species(net: ReactionNetwork, budget=None) -> WitnessCertificate:
    """1-species network with a 2-alternating subnetwork."""
    from ..structure import find_alternating_subnetwork

    if net.s != 1:
        raise ShapeError("not a 1-species network")
    idx = find_alternating_subnetwork(net, 2)
    if idx is None:
        raise ShapeError("no 2-alternating subnetwork")
    return witness_three_term(net, idx, {}, None, "one-species alternating", budget)


# --------------------------------------------------------------------------- rev pair + irreversible frame


@dataclass(frozen=True)
class PairIrrevFrame:
    """Species A is the one whose embedding is 2-alternating.  The pair is
    oriented so that y_A < y'_A; k1: y -> y', k2: y' -> y, k3: the
    irreversible reaction ytil -> ytil'."""

    a: str
    b: str
    k1: int
    k2: int
    k3: int
    y: tuple[int, int]
    yp: tuple[int, int]
    yt: tuple[int, int]
    ytp: tuple[int, int]

    @property
    def mirrored(self) -> bool:
        """True for the '<- <->' pattern (irreversible reactant left of the pair)."""
        return self.yt[0] < self.y[0]

    @property
    def slope(self) -> Fraction:
        return Fraction(self.yp[1] - self.y[1], self.yp[0] - self.y[0])

    @property
    def indices(self) -> tuple[int, int, int]:
        return (self.k1, self.k2, self.k3)

    @property
    def case(self) -> str:
        s = self.slope
        if s == 0:
            return "flat"
        near = self.y if self.mirrored else self.yp
        if s > 0:
            if (not self.mirrored and self.yp[1] <= self.yt[1]) or (self.mirrored and self.y[1] >= self.yt[1]):
                return "positive-slope"
            if sum(near) == sum(self.yt):
                return "slope-minus-one"
            return "zigzag-lift"
        if (not self.mirrored and self.yp[1] >= self.yt[1]) or (self.mirrored and self.y[1] <= self.yt[1]):
            return "negative-slope"
        return "zigzag-lift"


def theorem35_frames(net: ReactionNetwork) -> list[PairIrrevFrame]:
    """All frames of a 2-species network with one reversible pair and one
    irreversible reaction whose reaction vectors are parallel."""
    if net.s != 2 or net.r != 3:
        return []
    pairs = net.reversible_pairs()
    irr = net.irreversible()
    if len(pairs) != 1 or len(irr) != 1:
        return []
    if stoich_data(net).rank != 1:
        return []
    frames = []
    for ai, a in enumerate(net.species):
        b = net.species[1 - ai]
        emb = species_embedding(net, a)
        if emb.r != 3 or not is_T_alternating(emb, 2):
            continue
        i, j = pairs[0]
        if net.reactant_vector(i)[ai] > net.reactant_vector(j)[ai]:
            i, j = j, i
        k3 = irr[0]

        def pt(v):
            return (v[ai], v[1 - ai])

        frames.append(PairIrrevFrame(a, b, i, j, k3, pt(net.reactant_vector(i)), pt(net.reactant_vector(j)),
                                     pt(net.reactant_vector(k3)), pt(net.product_vector(k3))))
    return frames


def _frames_or_fail(net, want=None):
    frames = theorem35_frames(net)
    if want is not None:
        frames = [f for f in frames if want(f)]
    if not frames:
        raise ShapeError("network has no matching rev-pair + irreversible frame")
    return frames


def witness_positive_slope(net: ReactionNetwork, budget=None) -> WitnessCertificate:
    """Positive (or zero) slope: with b = mu a (T = 0) the three terms are
    monomials; a zero slope keeps b constant at 1 instead."""
    budget = _budget(budget)
    last = None
    for f in _frames_or_fail(net, lambda f: f.slope >= 0):
        t = Fraction(0) if f.slope > 0 else Fraction(1)
        try:
            return witness_three_term(net, f.indices, {f.b: t}, f.a, "positive-slope", budget)
        except ShapeError as exc:
            last = exc
    raise last


def witness_slope_minus_one(net: ReactionNetwork, budget=None, max_doublings: int = 40) -> WitnessCertificate:
    """b = mu a + T with T doubled until g(0) and g(1) have opposite signs
    while the leading coefficient has the sign of g(0)."""
    budget = _budget(budget)
    last = ShapeError("no slope -1 frame")
    for f in _frames_or_fail(net, lambda f: f.slope > 0):
        k1, k2, k3 = f.indices
        # the lowest-degree term must be k1 or k2 depending on orientation
        low, top1, top2 = (k2, k1, k3) if f.mirrored else (k1, k2, k3)
        phis = reaction_terms(net, make_substitution(net, {f.b: 1}, f.a))
        D = max(p.degree for p in phis)
        if not (phis[low].degree < D == phis[top1].degree == phis[top2].degree):
            last = ShapeError("top-degree terms do not match the slope -1 pattern")
            continue
        L1, L2 = phis[top1].lc, phis[top2].lc
        if (L1 > 0) == (L2 > 0):
            last = ShapeError("top-degree terms have equal signs")
            continue
        for big, small, Lb, Ls in ((top2, top1, L2, L1), (top1, top2, L1, L2)):
            kap = [Fraction(1)] * 3
            kap[big] = 2 * abs(Ls) / abs(Lb)
            sigma = 1 if Lb > 0 else -1
            low_sign = 1 if net.reaction_vector(low)[net.species.index(f.a)] > 0 else -1
            if low_sign != sigma:
                continue
            T = Fraction(1)
            for _ in range(max_doublings):
                budget.take()
                sub = make_substitution(net, {f.b: T}, f.a)
                terms = reaction_terms(net, sub)
                F1 = sum((kap[k] * terms[k](1) for k in range(3)), Fraction(0))
                if sigma * F1 < 0:
                    for nudge in [Fraction(0)] + [Fraction(s, 2 ** j) for j in range(1, 12) for s in (1, -1)]:
                        k_try = list(kap)
                        k_try[low] = kap[low] * (1 + nudge)
                        cert = certify(net, k_try, {f.b: T}, f.a, "slope-minus-one",
                                       [f"T={T}: g(0) and g(1) have opposite signs"], budget)
                        if cert is not None:
                            return cert
                    break
                T *= 2
    raise last


def _match_gfamily(net, f: PairIrrevFrame):
    """Match the three terms with b = T - mu a to the g-family.

    Returns (mu, p1, p2, n1, n2, first, mid, third, |c|) where first/mid/third
    are reaction indices playing (T-mu a)^n2, -l a^p1 (T-mu a)^n1, m a^p2.
    """
    ai = net.species.index(f.a)
    bi = 1 - ai
    mu = -f.slope
    if mu <= 0:
        raise ShapeError("slope is not negative")
    info = {}
    for k in f.indices:
        y = net.reactant_vector(k)
        v = net.reaction_vector(k)
        info[k] = (y[ai], y[bi], v[ai])
    a0 = min(t[0] for t in info.values())
    b0 = min(t[1] for t in info.values())
    for first, mid, third in permutations(f.indices):
        af, bf, cf = info[first]
        am, bm, cm = info[mid]
        at, bt, ct = info[third]
        if af != a0 or bt != b0:
            continue
        if not ((cf > 0) == (ct > 0) != (cm > 0)):
            continue
        n2, p2 = bf - b0, at - a0
        p1, n1 = am - a0, bm - b0
        if 1 <= p1 < p2 and 0 <= n1 < n2:
            return mu, p1, p2, n1, n2, first, mid, third, {k: abs(info[k][2]) for k in info}
    raise ShapeError("terms do not match the g-family")


def _gfamily_kappa(match, l, m):
    mu, p1, p2, n1, n2, first, mid, third, c = match
    kap = {first: 1 / Fraction(c[first]), mid: Fraction(l) / c[mid], third: Fraction(m) / c[third]}
    return kap


def _dyadic_grid(levels: int = 6) -> Iterator[Fraction]:
    """Positive dyadic rationals by increasing denominator, then magnitude."""
    seen = set()
    for k in range(levels):
        den = 2 ** k
        for num in range(1, 8 * den + 1):
            q = Fraction(num, den)
            if q not in seen:
                seen.add(q)
                yield q


def witness_negative_slope(net: ReactionNetwork, budget=None, phases=("roots", "grid")) -> WitnessCertificate:
    """b = T - mu a with T = 1: the g-family on (0, 1/mu).

    Phase "roots" prescribes two rational roots r1 < r2 and solves for
    (l, m), which are positive for every such pair: after dividing by
    z^p1 (T - mu z)^n1 the family is a decreasing plus an increasing convex
    function, minus l.  Phase "grid" scans (l, m) over a dyadic grid and
    hands families with >= 2 distinct roots to split_multiplicities.
    """
    budget = _budget(budget)
    last = ShapeError("no negative-slope frame")
    for f in _frames_or_fail(net, lambda f: f.slope < 0):
        try:
            match = _match_gfamily(net, f)
        except ShapeError as exc:
            last = exc
            continue
        mu, p1, p2, n1, n2 = match[:5]
        T = Fraction(1)
        def cert_for(gf: GFamily, note: str):
            kap = _gfamily_kappa(match, gf.l, gf.m)
            kappa = [kap[k] for k in range(net.r)]
            return certify(net, kappa, {f.b: T}, f.a, "negative-slope", [note], budget)

        if "roots" in phases:
            hi = T / mu
            for q1, q2 in ((Fraction(1, 3), Fraction(2, 3)), (Fraction(1, 4), Fraction(3, 4)),
                           (Fraction(1, 4), Fraction(1, 2)), (Fraction(1, 2), Fraction(3, 4))):
                budget.take()
                r1, r2 = q1 * hi, q2 * hi
                A = [r ** p1 * (T - mu * r) ** n1 for r in (r1, r2)]
                B = [r ** p2 for r in (r1, r2)]
                C = [(T - mu * r) ** n2 for r in (r1, r2)]
                # l*A - m*B = C at both roots
                det = -A[0] * B[1] + A[1] * B[0]
                if det == 0:
                    continue
                l = (-C[0] * B[1] + C[1] * B[0]) / det
                m = (A[0] * C[1] - A[1] * C[0]) / det
                if l <= 0 or m <= 0:
                    continue
                gf = GFamily(mu, T, l, m, p1, p2, n1, n2)
                cert = cert_for(gf, f"g-family (mu={mu}, p1={p1}, p2={p2}, n1={n1}, n2={n2}) "
                                    f"T={T}, l={l}, m={m}; prescribed roots {r1}, {r2}")
                if cert is not None:
                    return cert
        if "grid" in phases:
            for l in _dyadic_grid():
                for m in _dyadic_grid():
                    budget.take()
                    gf = GFamily(mu, T, l, m, p1, p2, n1, n2)
                    rep = isolate_roots(gf.expand(), gf.window, width=None)
                    budget.note(rep.total_in_window)
                    if rep.total_in_window < 2:
                        continue
                    try:
                        gf2 = split_multiplicities(gf)
                    except (SplitBudgetExceeded, GFamilyError):
                        continue
                    cert = cert_for(gf2, f"g-family grid hit T={T}, l={l}, m={m}; "
                                         f"after splitting l={gf2.l}, m={gf2.m}")
                    if cert is not None:
                        return cert
        raise BudgetExhausted(best=budget.best)
    raise last


def witness_zigzag_lift(net: ReactionNetwork, budget=None) -> WitnessCertificate:
    """Two-reaction subnetwork with a zigzag box (same stoichiometric
    subspace), certified by the generic search and then extended."""
    from ..structure import ZigzagClass, box_diagram, zigzag_class

    budget = _budget(budget)
    for i, j in combinations(range(net.r), 2):
        sub = net.subnetwork((i, j))
        if sub.s < 2 or not same_stoichiometric_subspace(sub, net):
            continue
        hit = False
        for pair in combinations(sub.species, 2):
            try:
                tag, _ = zigzag_class(box_diagram(sub, pair))
            except ValueError:
                continue
            hit = hit or tag == ZigzagClass.ZIGZAG
        if not hit:
            continue
        share = budget.child(_share(budget, 2))
        cert = witness_generic(sub, share, construction="zigzag-lift")
        budget.charge(share)
        if cert is not None:
            out = extend_certificate(net, cert, construction="zigzag-lift")
            if out is not None:
                return out
    raise ShapeError("no zigzag subnetwork could be certified and lifted")


def witness_theorem35(net: ReactionNetwork, budget=None) -> WitnessCertificate:
    """Dispatch over the proof cases for one reversible pair plus one
    irreversible reaction on two species."""
    budget = _budget(budget)
    frames = _frames_or_fail(net)
    errors = []
    for fn in (witness_positive_slope, witness_negative_slope, witness_slope_minus_one, witness_zigzag_lift):
        if fn in (witness_positive_slope, witness_slope_minus_one) and not any(f.slope >= 0 for f in frames):
            continue
        if fn is witness_negative_slope and not any(f.slope < 0 for f in frames):
            continue
        share = budget.child(_share(budget, 4))
        try:
            return fn(net, share)
        except ShapeError as exc:
            errors.append(f"{fn.__name__}: {exc}")
        except BudgetExhausted:
            errors.append(f"{fn.__name__}: budget share exhausted")
        finally:
            budget.charge(share)
    raise ShapeError("; ".join(errors))


# --------------------------------------------------------------------------- generic search


def _value_levels() -> list[list[Fraction]]:
    levels = []
    for k in range(4):
        den = 2 ** k
        vals = [Fraction(n, den) for n in range(1, 4 * den + 1) if Fraction(n, den).denominator == den]
        levels.append(vals)
    return levels


def totals_schedule(names: Sequence[str], allow_zero: Sequence[bool] = ()) -> Iterator[dict]:
    """Deterministic dyadic grid of totals: by level (largest denominator),
    then by sum of magnitudes, then lexicographically."""
    if not names:
        yield {}
        return
    allow_zero = list(allow_zero) or [False] * len(names)
    levels = _value_levels()
    level_of = {q: L for L, vals in enumerate(levels) for q in vals}
    level_of[Fraction(0)] = 0
    pool: list[Fraction] = []
    for L, vals in enumerate(levels):
        pool = pool + vals
        choices = [([Fraction(0)] if z else []) + pool for z in allow_zero]
        batch = [c for c in product(*choices) if max(level_of[x] for x in c) == L]
        batch.sort(key=lambda c: (sum(c), c))
        for combo in batch:
            yield dict(zip(names, combo))


def root_pair_schedule(window: Interval, count: int = 10) -> list[tuple[Fraction, Fraction]]:
    lo = window.lo or Fraction(0)
    if window.hi is None:
        pts = [lo + q for q in (Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2), Fraction(3, 2),
                                Fraction(4), Fraction(5, 2), Fraction(1, 4), Fraction(6), Fraction(1, 8))]
    else:
        w = window.hi - lo
        qs = []
        for d in range(2, 9):
            for n in range(1, d):
                q = Fraction(n, d)
                if q not in qs:
                    qs.append(q)
        pts = [lo + w * q for q in qs]
    pts = pts[:count]
    pairs = []
    for j in range(len(pts)):
        for i in range(j):
            a, b = sorted((pts[i], pts[j]))
            pairs.append((a, b))
    return pairs


def witness_generic(net: ReactionNetwork, budget=None, pivot: Optional[str] = None,
                    construction: str = "generic-grid", totals_iter=None) -> Optional[WitnessCertificate]:
    """Prescribe roots and solve for the rate constants.

    F = sum_k kappa_k phi_k is linear in kappa.  With r = 2 one rate is
    fixed to 1 and a single prescribed root determines the other; with
    r >= 3 two rates are free and two prescribed roots determine them, the
    rest fixed to 1.  Returns None when the budget runs out.
    """
    budget = _budget(budget)
    if net.r < 2:
        return None
    if pivot is None and totals_iter is None:
        # totals are nonnegative, so a co-moving species lagging the pivot
        # needs that species as the pivot instead
        try:
            v = reaction_direction(net)
        except ShapeError:
            return None
        pivots = [n for n, x in zip(net.species, v) if x]
        for i, p in enumerate(pivots):
            share = Budget(None) if budget.limit is None else budget.child(_share(budget, len(pivots) - i))
            cert = witness_generic(net, share, p, construction)
            budget.charge(share)
            if cert is not None:
                return cert
        return None
    try:
        base = make_substitution(net, {n: 1 for n in net.species}, pivot)
    except ShapeError:
        return None
    others = [n for n in net.species if n != base.pivot]
    allow_zero = [base.mu[n] > 0 for n in others]
    sched = totals_iter if totals_iter is not None else totals_schedule(others, allow_zero)
    try:
        for totals in sched:
            sub = make_substitution(net, totals, base.pivot)
            window = window_of(sub)
            if window is None:
                continue
            phis = reaction_terms(net, sub)
            pairs = root_pair_schedule(window)
            if net.r == 2:
                roots = sorted({r for pr in pairs for r in pr})
                for r in roots:
                    for fixed, free in ((0, 1), (1, 0)):
                        budget.take()
                        den = phis[free](r)
                        if den == 0:
                            continue
                        kf = -phis[fixed](r) / den
                        if kf <= 0:
                            continue
                        kap = [Fraction(1), Fraction(1)]
                        kap[free] = kf
                        cert = certify(net, kap, totals, base.pivot, construction,
                                       [f"prescribed root {r}"], budget)
                        if cert is not None:
                            return cert
                continue
            for r1, r2 in pairs:
                v1 = [p(r1) for p in phis]
                v2 = [p(r2) for p in phis]
                for i, j in combinations(range(net.r), 2):
                    budget.take()
                    rest1 = sum((v1[k] for k in range(net.r) if k not in (i, j)), Fraction(0))
                    rest2 = sum((v2[k] for k in range(net.r) if k not in (i, j)), Fraction(0))
                    det = v1[i] * v2[j] - v1[j] * v2[i]
                    if det == 0:
                        continue
                    ki = (-rest1 * v2[j] + rest2 * v1[j]) / det
                    kj = (-v1[i] * rest2 + v2[i] * rest1) / det
                    if ki <= 0 or kj <= 0:
                        continue
                    kap = [Fraction(1)] * net.r
                    kap[i], kap[j] = ki, kj
                    cert = certify(net, kap, totals, base.pivot, construction,
                                   [f"prescribed roots {r1}, {r2}"], budget)
                    if cert is not None:
                        return cert
    except BudgetExhausted:
        return None
    return None
