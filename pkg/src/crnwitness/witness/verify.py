"""Independent replay of a witness certificate.

The verifier trusts nothing in the certificate except the numbers it has
to check.  It recomputes the stoichiometric direction and the window,
rebuilds the rate function by evaluating the mass-action right-hand side
at sample points, and checks every claimed root with its own Sturm counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..netparse import ParseError, ReactionNetwork, parse_network
from ..realroots import Interval, UniPoly, count_roots_squarefree, sturm_count
from .certificate import WitnessCertificate
from .substitution import ShapeError, make_substitution, mass_action_rhs, window_of

__all__ = ["VerificationReport", "verify_certificate"]

STEPS = (
    "network match",
    "substitution record",
    "window",
    "polynomial mismatch",
    "root intervals",
    "positivity",
    "simple-root count",
    "nondegeneracy",
    "steady-state identity",
)


@dataclass
class VerificationReport:
    passed: bool = True
    steps: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def failed_step(self) -> str | None:
        for name, ok, _ in self.steps:
            if not ok:
                return name
        return None

    @property
    def detail(self) -> str:
        for name, ok, msg in self.steps:
            if not ok:
                return f"{name}: {msg}"
        return "all checks passed"

    def ok(self, name: str, msg: str = ""):
        self.steps.append((name, True, msg))

    def fail(self, name: str, msg: str):
        self.steps.append((name, False, msg))
        self.passed = False

    def __bool__(self):
        return self.passed

    def __str__(self):
        return ("PASS" if self.passed else "FAIL") + f" ({self.detail})"


class _Fail(Exception):
    def __init__(self, step, msg):
        super().__init__(msg)
        self.step = step
        self.msg = msg


def _align_kappa(net: ReactionNetwork, cert: WitnessCertificate) -> list[Fraction]:
    if len(cert.reactions) != net.r or len(cert.kappa) != net.r:
        raise _Fail("network match", f"certificate lists {len(cert.reactions)} reactions, network has {net.r}")
    kappa = [None] * net.r
    for text, k in zip(cert.reactions, cert.kappa):
        try:
            rx = parse_network(text).reactions[0]
        except ParseError as exc:
            raise _Fail("network match", f"bad reaction {text!r}: {exc}") from None
        idx = net.index_of(rx)
        if idx is None:
            raise _Fail("network match", f"reaction {text!r} is not in the network")
        if kappa[idx] is not None:
            raise _Fail("network match", f"reaction {text!r} listed twice")
        if k <= 0:
            raise _Fail("network match", f"rate constant for {text!r} is not positive")
        kappa[idx] = Fraction(k)
    return kappa


def _interpolation_check(net, kappa, sub, F: UniPoly):
    """Compare F with the pivot coordinate of the mass-action RHS at
    deg+1 points, and the other coordinates with mu_j * F."""
    deg = max(sum(net.reactant_vector(k)) for k in range(net.r))
    if F.degree > deg:
        raise _Fail("polynomial mismatch", f"degree {F.degree} exceeds reactant degree bound {deg}")
    for i in range(deg + 1):
        a = Fraction(i + 1, 3)
        x = sub.point(a)
        rhs = mass_action_rhs(net, kappa, x)
        Fa = F(a)
        for n in net.species:
            if rhs[n] != sub.mu[n] * Fa:
                raise _Fail("polynomial mismatch",
                            f"d{n}/dt at a={a} is {rhs[n]}, certificate implies {sub.mu[n] * Fa}")


def _check(net: ReactionNetwork, cert: WitnessCertificate, report: VerificationReport):
    kappa = _align_kappa(net, cert)
    report.ok("network match")

    rec = cert.substitution
    try:
        sub = make_substitution(net, {n: t for n, t in rec.totals.items() if n != rec.pivot}, rec.pivot)
    except ShapeError as exc:
        raise _Fail("substitution record", str(exc)) from None
    if set(rec.mu) != set(net.species) or any(rec.mu[n] != sub.mu[n] for n in net.species):
        raise _Fail("substitution record", "recorded mu does not match the stoichiometry")
    if rec.totals.get(rec.pivot, 0) != 0:
        raise _Fail("substitution record", "pivot total must be 0")
    if rec.monomial < 0:
        raise _Fail("substitution record", "negative monomial exponent")
    report.ok("substitution record", f"pivot {rec.pivot}")

    window = window_of(sub)
    if window is None:
        raise _Fail("window", "totals leave no positive concentrations")
    if window != cert.window:
        raise _Fail("window", f"recomputed window {window} differs from recorded {cert.window}")
    report.ok("window", str(window))

    if cert.poly.is_zero():
        raise _Fail("polynomial mismatch", "zero polynomial")
    F = cert.poly * UniPoly.monomial(rec.monomial)
    _interpolation_check(net, kappa, sub, F)
    report.ok("polynomial mismatch", "rate function reproduced exactly")

    roots = sorted(cert.roots, key=lambda r: (r.lo, r.hi))
    for r in roots:
        if r.exact is None and not r.lo < r.hi:
            raise _Fail("root intervals", f"empty interval ({r.lo}, {r.hi})")
        if r.exact is not None and not r.lo <= r.exact <= r.hi:
            raise _Fail("root intervals", f"exact root {r.exact} outside its interval")
    for r1, r2 in zip(roots, roots[1:]):
        if not r1.hi < r2.lo:
            raise _Fail("root intervals", f"intervals ({r1.lo}, {r1.hi}) and ({r2.lo}, {r2.hi}) overlap")
    report.ok("root intervals", f"{len(roots)} disjoint")

    for r in roots:
        pts = [r.exact] if r.exact is not None else [r.lo, r.hi]
        for a in pts:
            if not window.contains(a):
                raise _Fail("positivity", f"point {a} outside the window {window}")
            x = sub.point(a)
            bad = [n for n, v in x.items() if v <= 0]
            if bad:
                raise _Fail("positivity", f"species {', '.join(bad)} not positive at a={a}")
    report.ok("positivity")

    sqf = cert.poly.squarefree_part()
    dF = F.derivative()
    G = F.gcd(dF)  # constant iff F has no multiple roots anywhere
    simple = 0
    for r in roots:
        if r.exact is not None:
            if cert.poly(r.exact) != 0:
                raise _Fail("simple-root count", f"{r.exact} is not a root")
            if dF(r.exact) == 0:
                raise _Fail("nondegeneracy", f"rate function has a multiple root at {r.exact}")
        else:
            iv = Interval(r.lo, r.hi, True, True)
            if count_roots_squarefree(sqf, iv) != 1:
                raise _Fail("simple-root count", f"({r.lo}, {r.hi}) does not isolate exactly one root")
            if G.degree >= 1 and sturm_count(G, Interval(r.lo, r.hi, False, False)) != 0:
                raise _Fail("nondegeneracy", f"the root in ({r.lo}, {r.hi}) is multiple")
        simple += 1
    if simple < 2:
        raise _Fail("simple-root count", f"only {simple} simple root(s) certified, need 2")
    report.ok("simple-root count", f"{simple} simple roots")
    report.ok("nondegeneracy", "F' nonzero at every certified root")

    for r in roots:
        if r.exact is not None:
            rhs = mass_action_rhs(net, kappa, sub.point(r.exact))
            if any(v != 0 for v in rhs.values()):
                raise _Fail("steady-state identity", f"right-hand side nonzero at a={r.exact}")
    report.ok("steady-state identity")


def verify_certificate(net: ReactionNetwork, cert: WitnessCertificate) -> VerificationReport:
    """All-or-nothing check; the first failing step is named in the report."""
    report = VerificationReport()
    try:
        _check(net, cert, report)
    except _Fail as f:
        report.fail(f.step, f.msg)
    return report
