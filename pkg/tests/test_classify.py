from fractions import Fraction as F

import pytest

from crnwitness.classify import (
    ShapeTag,
    Verdict,
    classify,
    detect_shape,
    lift_from_subnetwork,
    reduce_multispecies,
    scalar_multiple,
)
from crnwitness.netparse import parse_network
from crnwitness.realroots import UniPoly
from crnwitness.witness import verify_certificate

from conftest import EXAMPLE_22, EXAMPLE_52, EXAMPLE_53, NOT_MSS_EXAMPLE, SLOPE_MINUS_ONE, ZIGZAG_EXAMPLE


def N(text):
    return parse_network(text)


def test_scalar_multiple():
    assert scalar_multiple((1, 1), (1, 1)) == 1
    assert scalar_multiple((2, -2), (-1, 1)) == -2
    assert scalar_multiple((1, 0), (1, 1)) is None
    with pytest.raises(ValueError):
        scalar_multiple((0, 0), (1, 1))


@pytest.mark.parametrize("text, tag", [
    ("0 -> A; 2A -> 3A; 3A -> 2A", ShapeTag.ONE_SPECIES),
    ("A -> B", ShapeTag.ONE_REACTION_OR_REV_PAIR),
    ("A <-> B + C", ShapeTag.ONE_REACTION_OR_REV_PAIR),
    (ZIGZAG_EXAMPLE, ShapeTag.TWO_IRREV),
    (EXAMPLE_22, ShapeTag.TWO_SPECIES_REV_PLUS_IRREV),
    ("2B <-> A + B; 2A + B <-> 3A", ShapeTag.TWO_SPECIES_TWO_REV),
    (EXAMPLE_52, ShapeTag.MULTI_SPECIES_RANK1),
    ("A -> B; B -> C; C -> A", ShapeTag.OTHER),
])
def test_detect_shape(text, tag):
    assert detect_shape(N(text)).tag == tag


def test_example_22():
    c = classify(N(EXAMPLE_22))
    assert c.verdict == Verdict.NONDEG_MSS
    assert c.summary() == ("NONDEG_MSS (Theorem: 2-species, 1 rev + 1 irrev; "
                           "embedded {0<->A; 2A->3A} is 2-alternating; lambda=1)")


def test_not_mss_example():
    c = classify(N(NOT_MSS_EXAMPLE))
    assert c.verdict == Verdict.NOT_MSS
    assert c.caveat is None


def test_zigzag_example():
    c = classify(N(ZIGZAG_EXAMPLE))
    assert c.verdict == Verdict.NONDEG_MSS
    assert any(e.rule == "zigzag" for e in c.evidence)


def test_two_irrev_slope_minus_one_is_unknown():
    # the only zigzag box has diagonal slope -1; kappa_1 = kappa_2 at T = 0
    # makes every point of the diagonal a steady state
    c = classify(N("2B -> A + 3B; A + B -> 0"))
    assert c.verdict == Verdict.UNKNOWN


def test_two_irrev_no_zigzag_has_caveat():
    c = classify(N("0 -> A + B; 2A + B -> 3A + 2B"))
    assert c.verdict == Verdict.NOT_MSS and c.caveat


def test_one_species_verdicts():
    yes = classify(N("0 -> A; A -> 0; 2A -> 3A; 3A -> 2A"))
    assert yes.verdict == Verdict.NONDEG_MSS
    no = classify(N("0 -> A; 2A -> 3A; 3A -> 2A"))
    assert no.verdict == Verdict.NOT_MSS and no.caveat


def test_small_networks_not_mss():
    assert classify(N("A -> B")).verdict == Verdict.NOT_MSS
    assert classify(N("A <-> 2B")).verdict == Verdict.NOT_MSS
    assert classify(N("0 -> A; A -> 0")).verdict == Verdict.NOT_MSS


def test_two_rev_pairs():
    c = classify(N("2B <-> A + B; 2A + B <-> 3A"))
    assert c.verdict == Verdict.NONDEG_MSS
    assert "3-alternating" in c.summary()
    assert classify(N("0 <-> A + B; 2A <-> 3A + 2B")).verdict == Verdict.NOT_MSS


def test_out_of_scope():
    c = classify(N("A -> B; B -> C; C -> A"))
    assert c.verdict == Verdict.OUT_OF_SCOPE


def test_multispecies_is_heuristic():
    c = classify(N(EXAMPLE_52))
    assert c.verdict == Verdict.NONDEG_MSS and c.heuristic
    c = classify(N(EXAMPLE_53))
    assert c.verdict == Verdict.NONDEG_MSS and c.heuristic
    assert verify_certificate(N(EXAMPLE_53), c.certificate).passed


def test_reduce_example_52_family():
    red = reduce_multispecies(N(EXAMPLE_52))
    assert red is not None
    assert red.pivot == "A" and red.signs == {"A": 1, "B": 1, "C": -1, "D": -1}
    k1, k2, k3, T = F(2), F(3), F(5), F(7)
    a = UniPoly([0, 1])
    t = UniPoly([T, -1])
    expected = t ** 4 * k1 - a ** 2 * t ** 2 * k2 + a ** 4 * t ** 2 * k3
    assert red.polynomial([k1, k2, k3], T) == expected


def test_reduce_example_53_fails():
    assert reduce_multispecies(N(EXAMPLE_53)) is None


def test_reduce_two_species_identity():
    net = N(EXAMPLE_22)
    red = reduce_multispecies(net)
    assert red.network is net


def test_reduce_requires_unit_rates():
    assert reduce_multispecies(N("2C <-> A + C + D; A + 2C -> 2A + D")) is None


def test_lift_from_subnetwork_two_pairs():
    net = N("2B <-> A + B; 2A + B <-> 3A")
    res = lift_from_subnetwork(net)
    assert res is not None
    assert detect_shape(res.subnetwork).tag == ShapeTag.TWO_SPECIES_REV_PLUS_IRREV
    assert verify_certificate(net, res.certificate).passed


def test_lift_none_cases():
    assert lift_from_subnetwork(N("A -> B")) is None
    assert lift_from_subnetwork(N("A -> B; B -> C")) is None


def test_classification_evidence_serializes():
    import json
    c = classify(N(EXAMPLE_22))
    json.dumps([e.to_dict() for e in c.evidence])
