import json
from fractions import Fraction as F

import pytest
import sympy

from crnwitness.netparse import parse_network
from crnwitness.realroots import Interval, RootInterval, UniPoly
from crnwitness.witness import (
    CertificateFormatError,
    ShapeError,
    WitnessCertificate,
    certify,
    dumps,
    extend_certificate,
    loads,
    make_substitution,
    mass_action_rhs,
    reduce_and_witness,
    substituted_polynomial,
    verify_certificate,
    witness_generic,
    witness_negative_slope,
    witness_one_species,
    witness_positive_slope,
    witness_search,
    witness_slope_minus_one,
    witness_theorem35,
    witness_two_pairs,
    witness_zigzag_lift,
)

from conftest import EXAMPLE_22, EXAMPLE_53, SLOPE_MINUS_ONE

NEGATIVE_SLOPE = "2B <-> A + B; 2A + B -> 3A"
ZIGZAG_LIFT = "0 <-> A + 2B; 2A -> 3A + 2B"
TWO_PAIRS = "2B <-> A + B; 2A + B <-> 3A"
ONE_SPECIES = "0 <-> A; 2A -> 3A"


def N(text):
    return parse_network(text)


# --------------------------------------------------------------------------- substitution


def _sympy_rate(net, kappa, totals, pivot):
    """Pivot coordinate of the mass-action ODE after x_j = mu_j a + T_j, built symbolically."""
    a = sympy.Symbol("a")
    R = lambda q: sympy.Rational(F(q).numerator, F(q).denominator)
    p = net.species.index(pivot)
    v = next(net.reaction_vector(k) for k in range(net.r) if any(net.reaction_vector(k)))
    x = {n: R(F(v[i], v[p])) * a + R(totals.get(n, 0)) for i, n in enumerate(net.species)}
    expr = 0
    for k in range(net.r):
        term = R(kappa[k]) * net.reaction_vector(k)[p]
        for n, e in zip(net.species, net.reactant_vector(k)):
            term *= x[n] ** e
        expr += term
    return sympy.Poly(sympy.expand(expr), a)


def _as_fracs(poly):
    return [F(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]


def test_example_22_positive_slope_form():
    k = [F(1), F(3), F(2)]
    poly, window, sub = substituted_polynomial(N(EXAMPLE_22), k, {"B": 0}, "A")
    assert poly == UniPoly([1, 0, -3, 2])  # 1 - l a^2 + m a^3
    assert window == Interval(0, None, True, True)
    assert sub.monomial == 0


def test_remark_corrected_totals_factor():
    net = N(EXAMPLE_53)
    poly, window, sub = substituted_polynomial(
        net, [F(2, 9), F(1), F(16, 9)], {"B": F(5, 3), "C": 3, "D": 3}, "A")
    target = UniPoly.from_roots([3, 3, 2, 1])
    ratio = poly.lc / target.lc
    assert ratio > 0 and poly == target * ratio
    assert window == Interval.open(0, 3)


@pytest.mark.parametrize("text, kappa, totals, pivot", [
    (EXAMPLE_22, [1, 3, 2], {"B": 1}, "A"),
    (NEGATIVE_SLOPE, [1, F(7, 2), F(9, 2)], {"A": 1}, "B"),
    (EXAMPLE_53, [F(2, 9), 1, F(16, 9)], {"B": F(8, 3), "C": 3, "D": 3}, "A"),
    ("2C + 2D <-> A + B + C + D; 2A + 2B + C + D -> 3A + 3B", [1, 5, 7], {"B": 0, "C": 2, "D": 3}, "A"),
])
def test_substitution_matches_sympy(text, kappa, totals, pivot):
    net = N(text)
    poly, _, sub = substituted_polynomial(net, kappa, totals, pivot)
    expected = _as_fracs(_sympy_rate(net, kappa, totals, pivot))
    full = poly * UniPoly.monomial(sub.monomial)
    assert list(full.coeffs) == expected


def test_substitution_errors():
    with pytest.raises(ShapeError):
        substituted_polynomial(N(EXAMPLE_22), [1, 0, 1], {"B": 0}, "A")
    with pytest.raises(ShapeError):
        make_substitution(N("A -> B; B -> C"), {})
    with pytest.raises(ShapeError):  # B = T - a with T = 0 leaves no window
        substituted_polynomial(N(NEGATIVE_SLOPE), [1, 1, 1], {"A": 0}, "B")


def test_mass_action_rhs():
    rhs = mass_action_rhs(N(EXAMPLE_22), [1, 1, 1], {"A": F(2), "B": F(3)})
    # 1 - 6 + 12
    assert rhs == {"A": 7, "B": 7}


# --------------------------------------------------------------------------- certificates


@pytest.fixture(scope="module")
def cert53():
    cert = reduce_and_witness(N(EXAMPLE_53))
    assert cert is not None
    return cert


def test_certificate_json_round_trip(cert53):
    text = dumps(cert53)
    again = loads(text)
    assert dumps(again) == text
    assert again.kappa == cert53.kappa and again.poly == cert53.poly
    data = json.loads(text)
    assert data["format"] == "crnwitness.certificate" and data["version"] == 1
    assert all(isinstance(c, str) and "/" in c for c in data["poly"])


def test_certificate_format_errors():
    with pytest.raises(CertificateFormatError):
        loads("not json")
    with pytest.raises(CertificateFormatError):
        loads(json.dumps({"format": "other"}))
    bad = json.loads(dumps(reduce_and_witness(N(EXAMPLE_53))))
    bad["poly"][0] = 0.5
    with pytest.raises(CertificateFormatError):
        loads(json.dumps(bad))


def test_verify_passes(cert53):
    report = verify_certificate(N(EXAMPLE_53), cert53)
    assert report.passed and report.failed_step is None
    assert str(report).startswith("PASS")


def _tamper(cert, mutate):
    d = json.loads(dumps(cert))
    mutate(d)
    return loads(json.dumps(d))


def test_tampered_polynomial(cert53):
    def bump(d):
        d["poly"][0] = str(F(d["poly"][0]) + 1) + ("/1" if "/" not in str(F(d["poly"][0]) + 1) else "")
    report = verify_certificate(N(EXAMPLE_53), _tamper(cert53, bump))
    assert report.failed_step == "polynomial mismatch"


def test_tampered_kappa(cert53):
    def bump(d):
        d["kappa"][0]["value"] = "5/1"
    assert verify_certificate(N(EXAMPLE_53), _tamper(cert53, bump)).failed_step == "polynomial mismatch"


def test_nonpositive_kappa(cert53):
    def zero(d):
        d["kappa"][0]["value"] = "0/1"
    assert verify_certificate(N(EXAMPLE_53), _tamper(cert53, zero)).failed_step == "network match"


def test_mismatched_network(cert53):
    assert verify_certificate(N(EXAMPLE_22), cert53).failed_step == "network match"


def test_tampered_window(cert53):
    def widen(d):
        d["window"]["hi"] = "100/1"
    assert verify_certificate(N(EXAMPLE_53), _tamper(cert53, widen)).failed_step == "window"


def test_overlapping_roots(cert53):
    def overlap(d):
        d["roots"][0]["hi"] = d["roots"][1]["hi"]
    assert verify_certificate(N(EXAMPLE_53), _tamper(cert53, overlap)).failed_step == "root intervals"


def test_single_root_rejected(cert53):
    def drop(d):
        d["roots"] = d["roots"][:1]
    assert verify_certificate(N(EXAMPLE_53), _tamper(cert53, drop)).failed_step == "simple-root count"


def test_double_root_fixture_fails():
    # kappa = (2, 5, 4, 1) gives -(a - 1)^2 (a - 2)
    net = N("0 -> A; A -> 0; 2A -> 3A; 3A -> 2A")
    poly, window, sub = substituted_polynomial(net, [2, 5, 4, 1], {}, "A")
    assert poly == UniPoly.from_roots([1, 1, 2], lead=-1)
    cert = WitnessCertificate.build(
        net, [2, 5, 4, 1], sub, poly, window,
        [RootInterval(F(1), F(1), 2, F(1)), RootInterval(F(2), F(2), 1, F(2))])
    report = verify_certificate(net, cert)
    assert not report.passed and report.failed_step == "nondegeneracy"
    assert certify(net, [2, 5, 4, 1], {}, "A") is None


# --------------------------------------------------------------------------- constructions


def _check(net, cert, construction=None):
    assert cert is not None
    assert verify_certificate(net, cert).passed
    if construction:
        assert cert.construction.startswith(construction)
    # independent oracle: sympy counts positive simple roots of the rate function
    a = sympy.Symbol("a")
    R = lambda q: sympy.Rational(q.numerator, q.denominator)
    p = sympy.Poly(sum(R(c) * a ** i for i, c in enumerate(cert.poly.coeffs)), a)
    lo = cert.window.lo if cert.window.lo is not None else -sympy.oo
    hi = cert.window.hi if cert.window.hi is not None else sympy.oo
    roots = [r for r in p.real_roots() if lo < r < hi]
    simple = [r for r in set(roots) if roots.count(r) == 1]
    assert len(simple) >= 2


def test_positive_slope():
    net = N(EXAMPLE_22)
    _check(net, witness_positive_slope(net), "positive-slope")


def test_slope_minus_one():
    net = N(SLOPE_MINUS_ONE)
    _check(net, witness_slope_minus_one(net), "slope-minus-one")


def test_negative_slope():
    net = N(NEGATIVE_SLOPE)
    _check(net, witness_negative_slope(net), "negative-slope")


def test_zigzag_lift():
    net = N(ZIGZAG_LIFT)
    _check(net, witness_zigzag_lift(net), "zigzag-lift")


def test_theorem35_dispatch():
    for text in (EXAMPLE_22, SLOPE_MINUS_ONE, NEGATIVE_SLOPE, ZIGZAG_LIFT):
        net = N(text)
        _check(net, witness_theorem35(net))


def test_wrong_shape_raises():
    with pytest.raises(ShapeError):
        witness_theorem35(N("A -> B; 2A + B -> 3A"))
    with pytest.raises(ShapeError):
        witness_negative_slope(N(EXAMPLE_22))


def test_one_species():
    net = N(ONE_SPECIES)
    _check(net, witness_one_species(net), "one-species")


def test_two_pairs():
    net = N(TWO_PAIRS)
    _check(net, witness_two_pairs(net), "two-pairs-lift")


def test_extension_of_subnetwork_certificate():
    net = N("0 <-> A; 0 -> 2A; 2A -> 3A")
    sub_cert = witness_one_species(net.subnetwork([0, 1, 3]))
    cert = extend_certificate(net, sub_cert)
    _check(net, cert)
    assert len(cert.kappa) == 4


def test_generic_search():
    net = N("2B <-> A + 3B; A + B -> 0")
    _check(net, witness_generic(net, 2000), "generic-grid")


def test_search_budget_and_scope():
    assert witness_search(N(EXAMPLE_22), 0) is None
    assert witness_search(N("A -> B; B -> C"), 100) is None
    assert witness_search(N("2B <-> A + B; 3A -> 2A + B"), 200) is None


def test_search_is_deterministic():
    net = N(NEGATIVE_SLOPE)
    assert dumps(witness_search(net)) == dumps(witness_search(net))


def test_reduce_and_witness_example_52():
    net = N("2C + 2D <-> A + B + C + D; 2A + 2B + C + D -> 3A + 3B")
    cert = reduce_and_witness(net)
    _check(net, cert, "multispecies-reduction")
    assert cert.totals["B"] == 0 and cert.totals["C"] == cert.totals["D"] > 0


def test_reduce_and_witness_example_53_fallback(cert53):
    _check(N(EXAMPLE_53), cert53, "generic-grid")
