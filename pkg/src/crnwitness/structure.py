"""Stoichiometric linear algebra and the small combinatorial diagrams used
by the classifier: embedded networks, arrow diagrams, alternating
subnetworks and box diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .netparse import Complex, Reaction, ReactionNetwork

__all__ = [
    "StoichData",
    "Arrow",
    "BoxDiagram",
    "ZigzagClass",
    "rref",
    "stoich_data",
    "same_stoichiometric_subspace",
    "restrict_reactions",
    "embedded_network",
    "species_embedding",
    "arrow_diagram",
    "is_T_alternating",
    "find_alternating_subnetwork",
    "box_diagram",
    "zigzag_class",
]


# --------------------------------------------------------------------------- linear algebra


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (matrix, pivots)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def _nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class StoichData:
    matrix: tuple[tuple[int, ...], ...]  # s x r, column k = reaction vector k
    rank: int
    conservation_basis: tuple[tuple[Fraction, ...], ...]

    @property
    def s(self) -> int:
        return len(self.matrix)


def stoich_data(net: ReactionNetwork) -> StoichData:
    cols = [net.reaction_vector(k) for k in range(net.r)]
    matrix = tuple(tuple(col[i] for col in cols) for i in range(net.s))
    _, pivots = rref(cols) if cols else ([], [])
    rank = len(pivots)
    # left kernel of Gamma == nullspace of Gamma^T, whose rows are the reaction vectors
    basis = _nullspace(cols, net.s) if cols else [
        [Fraction(int(i == j)) for j in range(net.s)] for i in range(net.s)]
    return StoichData(matrix, rank, tuple(tuple(v) for v in basis))


def _span_rank(vectors: Iterable[Sequence[int]]) -> int:
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return len(rref(vectors)[1])


def same_stoichiometric_subspace(sub: ReactionNetwork, net: ReactionNetwork) -> bool:
    """True when ``sub`` (over a subset of ``net``'s species) spans the same S."""
    species = net.species
    a = [rx.product.vector(species) for rx in sub.reactions]
    a = [tuple(p - q for p, q in zip(row, rx.reactant.vector(species))) for row, rx in zip(a, sub.reactions)]
    b = [net.reaction_vector(k) for k in range(net.r)]
    ra = _span_rank(a)
    return ra == _span_rank(b) and _span_rank(a + b) == ra


# --------------------------------------------------------------------------- embedded networks


def restrict_reactions(reactions: Iterable[Reaction], keep) -> list[Reaction]:
    """Zero out species outside ``keep``, drop trivial reactions, dedupe."""
    keep = set(keep)
    out: list[Reaction] = []
    seen = set()
    for rx in reactions:
        new = Reaction(rx.reactant.restrict(keep), rx.product.restrict(keep))
        if new.reactant == new.product or new in seen:
            continue
        seen.add(new)
        out.append(new)
    return out


def embedded_network(net: ReactionNetwork, drop_reactions: Iterable[int] = (),
                     drop_species: Iterable[str] = ()) -> ReactionNetwork:
    drop_reactions = set(drop_reactions)
    keep = [s for s in net.species if s not in set(drop_species)]
    kept = [rx for k, rx in enumerate(net.reactions) if k not in drop_reactions]
    return ReactionNetwork.from_reactions(restrict_reactions(kept, keep), keep)


def species_embedding(net: ReactionNetwork, name: str) -> ReactionNetwork:
    """The 1-species embedded network keeping only ``name``."""
    return embedded_network(net, drop_species=[s for s in net.species if s != name])


# --------------------------------------------------------------------------- 1-species diagrams


class Arrow(str, Enum):
    RIGHT = "->"
    LEFT = "<-"
    BOTH = "<->"


def _one_species_pairs(net: ReactionNetwork) -> list[tuple[int, int]]:
    if net.s != 1:
        raise ValueError(f"expected a 1-species network, got {net.s} species")
    name = net.species[0]
    return [(rx.reactant.coeff(name), rx.product.coeff(name)) for rx in net.reactions]


def arrow_diagram(net: ReactionNetwork) -> tuple[Arrow, ...]:
    """Net direction of the reactions leaving each distinct reactant, in
    increasing order of reactant coefficient."""
    pairs = _one_species_pairs(net)
    dirs: dict[int, set[bool]] = {}
    for a, b in pairs:
        dirs.setdefault(a, set()).add(b > a)
    out = []
    for a in sorted(dirs):
        d = dirs[a]
        out.append(Arrow.BOTH if len(d) == 2 else (Arrow.RIGHT if True in d else Arrow.LEFT))
    return tuple(out)


def is_T_alternating(net: ReactionNetwork, T: int) -> bool:
    if T < 1:
        raise ValueError("T must be a positive integer")
    if net.s != 1:
        raise ValueError(f"expected a 1-species network, got {net.s} species")
    if net.r != T + 1:
        return False
    diagram = arrow_diagram(net)
    if len(diagram) != T + 1 or Arrow.BOTH in diagram:
        return False
    return all(x != y for x, y in zip(diagram, diagram[1:]))


def find_alternating_subnetwork(net: ReactionNetwork, T: int) -> tuple[int, ...] | None:
    """Indices of the first (lexicographic) T-alternating reaction subset."""
    if net.s != 1:
        raise ValueError(f"expected a 1-species network, got {net.s} species")
    for subset in combinations(range(net.r), T + 1):
        if is_T_alternating(net.subnetwork(subset), T):
            return subset
    return None


# --------------------------------------------------------------------------- box diagrams


@dataclass(frozen=True)
class BoxDiagram:
    corners: tuple[tuple[int, int], tuple[int, int]]
    arrows: tuple[tuple[int, int], tuple[int, int]]
    diagonal_slope: Fraction


class ZigzagClass(str, Enum):
    ZIGZAG = "ZIGZAG"
    NONE = "NONE"


def box_diagram(net: ReactionNetwork, pair: tuple[str, str] | None = None) -> BoxDiagram:
    """Box of a 2-reaction network, projected onto the species ``pair``.

    Raises ValueError when the reactants share a coordinate.
    """
    if net.r != 2:
        raise ValueError("box diagram needs exactly two reactions")
    if pair is None:
        if net.s != 2:
            raise ValueError("box diagram needs exactly two species (or an explicit pair)")
        pair = (net.species[0], net.species[1])
    y = net.reactions[0].reactant.vector(pair)
    yt = net.reactions[1].reactant.vector(pair)
    if y[0] == yt[0] or y[1] == yt[1]:
        raise ValueError("reactants share a coordinate; box diagram undefined")
    arrows = tuple(
        tuple(p - q for p, q in zip(rx.product.vector(pair), rx.reactant.vector(pair)))
        for rx in net.reactions)
    slope = Fraction(yt[1] - y[1], yt[0] - y[0])
    return BoxDiagram((y, yt), arrows, slope)


def zigzag_class(box: BoxDiagram) -> tuple[ZigzagClass, Fraction]:
    """Recognize the four zigzag pictures as sign conditions.

    With diagonal d = (d1, d2) from the first reactant to the second and
    arrows v, w anchored at the two corners, the pictures are exactly:

    * v and w point in opposite directions (w = -c v, c > 0), and
    * d1*v1 and d2*v2 are nonzero with opposite signs.

    The second condition says the arrow at each corner leaves the box
    across opposite sides of the diagonal; it also forces the arrows to
    have a negative slope when the diagonal has a positive one and vice
    versa, which distinguishes the left and right pairs of pictures.
    Arrows parallel to a box side give a zero product and are rejected.
    """
    (y, yt), (v, w), slope = box.corners, box.arrows, box.diagonal_slope
    d1, d2 = yt[0] - y[0], yt[1] - y[1]
    antiparallel = v[0] * w[1] == v[1] * w[0] and v[0] * w[0] + v[1] * w[1] < 0
    if antiparallel and d1 * v[0] * d2 * v[1] < 0:
        return ZigzagClass.ZIGZAG, slope
    return ZigzagClass.NONE, slope
