"""Enumerate small networks of the classified shapes, up to species permutation."""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator, Optional

from .classify import ShapeTag, detect_shape
from .netparse import Complex, Reaction, ReactionNetwork

__all__ = ["CORPUS_SHAPES", "enumerate_shape", "enumerate_corpus", "canonical_key"]

NAMES = "ABCDEFGH"

CORPUS_SHAPES = (
    ShapeTag.ONE_SPECIES,
    ShapeTag.TWO_IRREV,
    ShapeTag.TWO_SPECIES_REV_PLUS_IRREV,
    ShapeTag.TWO_SPECIES_TWO_REV,
)


def _complexes(s: int, bound: int) -> list[tuple[int, ...]]:
    return list(product(range(bound + 1), repeat=s))


def canonical_key(reactions, s: int) -> tuple:
    """Sorted reaction list minimized over permutations of the species."""
    best = None
    for perm in permutations(range(s)):
        key = tuple(sorted((tuple(y[i] for i in perm), tuple(yp[i] for i in perm)) for y, yp in reactions))
        if best is None or key < best:
            best = key
    return best


def _network(reactions, s: int) -> ReactionNetwork:
    names = NAMES[:s]

    def cx(v):
        return Complex([(n, c) for n, c in zip(names, v) if c])

    return ReactionNetwork.from_reactions([Reaction(cx(y), cx(yp)) for y, yp in reactions], names)


def _candidates(tag: ShapeTag, bound: int, one_species_r: tuple[int, ...]):
    if tag == ShapeTag.ONE_SPECIES:
        rx = [(y, yp) for y, yp in product(_complexes(1, bound), repeat=2) if y != yp]
        for r in one_species_r:
            yield from ((1, list(c)) for c in combinations(rx, r))
        return
    cxs = _complexes(2, bound)
    rx = [(y, yp) for y, yp in product(cxs, repeat=2) if y != yp]
    pairs = list(combinations(cxs, 2))
    if tag == ShapeTag.TWO_IRREV:
        for a, b in combinations(rx, 2):
            if a != (b[1], b[0]):
                yield 2, [a, b]
    elif tag == ShapeTag.TWO_SPECIES_REV_PLUS_IRREV:
        for y, yp in pairs:
            for z in rx:
                if z not in ((y, yp), (yp, y)):
                    yield 2, [(y, yp), (yp, y), z]
    elif tag == ShapeTag.TWO_SPECIES_TWO_REV:
        for (y, yp), (z, zp) in combinations(pairs, 2):
            yield 2, [(y, yp), (yp, y), (z, zp), (zp, z)]
    else:
        raise ValueError(f"shape {tag.value} is not enumerated")


def enumerate_shape(tag: ShapeTag, bound: int, one_species_r: tuple[int, ...] = (2, 3, 4)) -> Iterator[ReactionNetwork]:
    """Networks whose detected shape is ``tag``, coefficients <= ``bound``,
    in a deterministic order with species permutations removed.

    Species that occur in no complex are dropped by requiring every species
    to appear somewhere.
    """
    tag = ShapeTag(tag)
    seen = set()
    for s, reactions in _candidates(tag, bound, one_species_r):
        if any(all(y[i] == 0 and yp[i] == 0 for y, yp in reactions) for i in range(s)):
            continue
        key = canonical_key(reactions, s)
        if key in seen:
            continue
        seen.add(key)
        net = _network(reactions, s)
        if detect_shape(net).tag == tag:
            yield net


def enumerate_corpus(bound: int, shape: Optional[str] = None) -> Iterator[ReactionNetwork]:
    tags = CORPUS_SHAPES if shape is None else (ShapeTag(shape),)
    for tag in tags:
        yield from enumerate_shape(tag, bound)
