from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from crnwitness.netparse import parse_network
from crnwitness.structure import (
    Arrow,
    ZigzagClass,
    arrow_diagram,
    box_diagram,
    embedded_network,
    find_alternating_subnetwork,
    is_T_alternating,
    rref,
    same_stoichiometric_subspace,
    species_embedding,
    stoich_data,
    zigzag_class,
)

from conftest import EXAMPLE_22, ZIGZAG_EXAMPLE


def test_stoich_data_rank_one():
    sd = stoich_data(parse_network(EXAMPLE_22))
    assert sd.rank == 1
    assert sd.matrix == ((1, -1, 1), (1, -1, 1))
    (w,) = sd.conservation_basis
    # w annihilates every reaction vector
    assert w[0] + w[1] == 0 and w != (0, 0)


def test_conservation_basis_annihilates_columns():
    net = parse_network("A + B -> C; C -> A; 2A -> A + D")
    sd = stoich_data(net)
    assert sd.rank + len(sd.conservation_basis) == net.s
    for w in sd.conservation_basis:
        for k in range(net.r):
            assert sum(Fraction(a) * b for a, b in zip(w, net.reaction_vector(k))) == 0


def test_rref_dependent_rows():
    rows, pivots = rref([[1, 2], [2, 4]])
    assert pivots == [0]
    assert rows[1] == [0, 0]


def test_species_embedding_drops_b():
    emb = species_embedding(parse_network(EXAMPLE_22), "A")
    assert str(emb.reactions[0]) == "0 -> A"
    assert [str(r) for r in emb.reactions] == ["0 -> A", "A -> 0", "2A -> 3A"]


def test_embedded_network_by_species():
    emb = embedded_network(parse_network(EXAMPLE_22), drop_species=["B"])
    assert emb.species == ("A",) and emb.r == 3


def test_arrow_diagram_and_alternation():
    emb = species_embedding(parse_network(EXAMPLE_22), "A")
    assert arrow_diagram(emb) == (Arrow.RIGHT, Arrow.LEFT, Arrow.RIGHT)
    assert is_T_alternating(emb, 2)
    assert not is_T_alternating(emb, 3)


def test_arrow_both():
    net = parse_network("0 -> A; A -> 0; A -> 2A")
    assert arrow_diagram(net) == (Arrow.RIGHT, Arrow.BOTH)
    assert not is_T_alternating(net, 2)


def test_arrow_diagram_rejects_two_species():
    with pytest.raises(ValueError):
        arrow_diagram(parse_network("A -> B"))


def test_find_alternating_subnetwork():
    net = parse_network("0 -> A; A -> 0; 2A -> 3A; 3A -> 2A")
    idx = find_alternating_subnetwork(net, 2)
    assert idx == (0, 1, 2)
    assert is_T_alternating(net.subnetwork(idx), 2)
    assert find_alternating_subnetwork(parse_network("0 -> A; 2A -> 3A; 3A -> 2A"), 2) is None


def test_box_diagram_zigzag_example():
    box = box_diagram(parse_network(ZIGZAG_EXAMPLE))
    assert box.corners == ((1, 0), (2, 1))
    assert box.diagonal_slope == 1
    assert zigzag_class(box) == (ZigzagClass.ZIGZAG, Fraction(1))


def test_box_diagram_inward_zigzag():
    tag, slope = zigzag_class(box_diagram(parse_network("A + B -> 2A; 2A + 2B -> A + 3B")))
    assert tag == ZigzagClass.ZIGZAG and slope == 1


def test_box_diagram_parallel_arrows_not_zigzag():
    tag, _ = zigzag_class(box_diagram(parse_network("0 -> A + B; 2A + B -> 3A + 2B")))
    assert tag == ZigzagClass.NONE


def test_box_diagram_shared_coordinate():
    with pytest.raises(ValueError):
        box_diagram(parse_network("A -> B; A + B -> 2B"))


def test_same_stoichiometric_subspace():
    net = parse_network(EXAMPLE_22)
    assert same_stoichiometric_subspace(net.subnetwork([0, 2]), net)
    assert not same_stoichiometric_subspace(parse_network("A -> B"), parse_network("A -> B; B -> C"))


one_species = st.lists(
    st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(lambda t: t[0] != t[1]),
    min_size=1, max_size=6, unique=True,
)


def _net(pairs):
    def cx(n):
        return "0" if n == 0 else f"{n}A"
    return parse_network("; ".join(f"{cx(a)} -> {cx(b)}" for a, b in pairs))


@given(one_species)
def test_arrow_diagram_length_is_distinct_reactants(pairs):
    net = _net(pairs)
    assert len(arrow_diagram(net)) == len({a for a, _ in pairs})


@given(one_species, st.integers(1, 3))
def test_found_subnetwork_is_alternating(pairs, T):
    net = _net(pairs)
    idx = find_alternating_subnetwork(net, T)
    if idx is not None:
        assert is_T_alternating(net.subnetwork(idx), T)
