from itertools import permutations

from crnwitness.classify import ShapeTag, detect_shape
from crnwitness.corpus import canonical_key, enumerate_shape
from crnwitness.netparse import format_network


def _vectors(net):
    return [(net.reactant_vector(k), net.product_vector(k)) for k in range(net.r)]


def test_shapes_match_filter():
    for tag in (ShapeTag.ONE_SPECIES, ShapeTag.TWO_SPECIES_REV_PLUS_IRREV, ShapeTag.TWO_SPECIES_TWO_REV):
        for net in enumerate_shape(tag, 1):
            assert detect_shape(net).tag == tag


def test_no_duplicates_up_to_species_swap():
    nets = list(enumerate_shape(ShapeTag.TWO_SPECIES_REV_PLUS_IRREV, 2))
    keys = [canonical_key(_vectors(n), 2) for n in nets]
    assert len(keys) == len(set(keys))
    # swapping the species of any member lands on an already-listed key
    swapped = canonical_key([(y[::-1], yp[::-1]) for y, yp in _vectors(nets[5])], 2)
    assert swapped == keys[5]


def test_brute_force_count_bound_one():
    # independent count: every (pair, irreversible) over {0,1}^2, dedup by sorted tuples under both orders
    cx = [(a, b) for a in range(2) for b in range(2)]
    seen = set()
    for i, y in enumerate(cx):
        for yp in cx[i + 1:]:
            for z in cx:
                for zp in cx:
                    if z == zp or {z, zp} == {y, yp}:
                        continue
                    rx = [(y, yp), (yp, y), (z, zp)]
                    if any(all(u[j] == 0 and v[j] == 0 for u, v in rx) for j in range(2)):
                        continue
                    forms = []
                    for perm in permutations(range(2)):
                        forms.append(tuple(sorted((tuple(u[p] for p in perm), tuple(v[p] for p in perm))
                                                  for u, v in rx)))
                    seen.add(min(forms))
    nets = list(enumerate_shape(ShapeTag.TWO_SPECIES_REV_PLUS_IRREV, 1))
    assert len(nets) == len(seen)


def test_deterministic_order():
    a = [format_network(n) for n in enumerate_shape(ShapeTag.ONE_SPECIES, 2)]
    b = [format_network(n) for n in enumerate_shape(ShapeTag.ONE_SPECIES, 2)]
    assert a == b and len(a) > 0
