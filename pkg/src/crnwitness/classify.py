"""Decide nondegenerate multistationarity for the network shapes covered by
the classification theorems, with structured evidence."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .netparse import Complex, Reaction, ReactionNetwork, format_network
from .realroots import UniPoly
from .structure import (
    ZigzagClass,
    box_diagram,
    find_alternating_subnetwork,
    is_T_alternating,
    same_stoichiometric_subspace,
    species_embedding,
    stoich_data,
    zigzag_class,
)

__all__ = [
    "Verdict",
    "ShapeTag",
    "NetworkShape",
    "Evidence",
    "Classification",
    "ReducedProblem",
    "scalar_multiple",
    "detect_shape",
    "classify",
    "lift_from_subnetwork",
    "LiftResult",
    "reduce_multispecies",
]


class Verdict(str, Enum):
    NONDEG_MSS = "NONDEG_MSS"
    NOT_MSS = "NOT_MSS"
    UNKNOWN = "UNKNOWN"
    OUT_OF_SCOPE = "OUT_OF_SCOPE"


class ShapeTag(str, Enum):
    ONE_SPECIES = "ONE_SPECIES"
    ONE_REACTION_OR_REV_PAIR = "ONE_REACTION_OR_REV_PAIR"
    TWO_IRREV = "TWO_IRREV"
    TWO_SPECIES_REV_PLUS_IRREV = "TWO_SPECIES_REV_PLUS_IRREV"
    TWO_SPECIES_TWO_REV = "TWO_SPECIES_TWO_REV"
    MULTI_SPECIES_RANK1 = "MULTI_SPECIES_RANK1"
    OTHER = "OTHER"


@dataclass(frozen=True)
class NetworkShape:
    tag: ShapeTag
    s: int
    r: int


@dataclass
class Evidence:
    rule: str
    statement: str
    data: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"rule": self.rule, "statement": self.statement, "data": _jsonable(self.data)}


def _jsonable(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Enum):
        return x.value
    return x


@dataclass
class Classification:
    verdict: Verdict
    shape: NetworkShape
    evidence: list[Evidence] = field(default_factory=list)
    caveat: Optional[str] = None
    heuristic: bool = False
    certificate: object = None  # WitnessCertificate when one backs the verdict

    def summary(self) -> str:
        parts = [e.statement for e in self.evidence if e.statement]
        return f"{self.verdict.value} ({'; '.join(parts)})" if parts else self.verdict.value

    __str__ = summary


# --------------------------------------------------------------------------- helpers


def scalar_multiple(v: Sequence[int], w: Sequence[int]) -> Optional[Fraction]:
    """lambda with v = lambda * w, or None."""
    if len(v) != len(w):
        raise ValueError("vectors of different length")
    if not any(v) or not any(w):
        raise ValueError("zero vector")
    i = next(k for k, x in enumerate(w) if x)
    lam = Fraction(v[i], w[i])
    if all(Fraction(a) == lam * b for a, b in zip(v, w)):
        return lam
    return None


def detect_shape(net: ReactionNetwork) -> NetworkShape:
    s, r = net.s, net.r
    pairs = net.reversible_pairs()
    irr = net.irreversible()
    if s == 1:
        tag = ShapeTag.ONE_SPECIES
    elif r == 1 or (r == 2 and len(pairs) == 1):
        tag = ShapeTag.ONE_REACTION_OR_REV_PAIR
    elif r == 2:
        tag = ShapeTag.TWO_IRREV
    elif s == 2 and len(pairs) == 1 and len(irr) == 1:
        tag = ShapeTag.TWO_SPECIES_REV_PLUS_IRREV
    elif s == 2 and len(pairs) == 2 and r == 4:
        tag = ShapeTag.TWO_SPECIES_TWO_REV
    elif s >= 3 and len(pairs) == 1 and len(irr) == 1 and stoich_data(net).rank == 1:
        tag = ShapeTag.MULTI_SPECIES_RANK1
    else:
        tag = ShapeTag.OTHER
    return NetworkShape(tag, s, r)


def _compact(net: ReactionNetwork) -> str:
    return "{" + format_network(net, compact=True) + "}"


def _fmt_q(q: Fraction) -> str:
    return str(q)


def _pair_lambda(net: ReactionNetwork) -> Optional[Fraction]:
    """lambda for y' - y = lambda (w' - w), first pair against the rest."""
    pairs = net.reversible_pairs()
    k = pairs[0][0]
    other = [j for j in range(net.r) if j not in pairs[0]][0]
    return scalar_multiple(net.reaction_vector(k), net.reaction_vector(other))


def _alternating_species(net: ReactionNetwork, T: int) -> list[tuple[str, ReactionNetwork]]:
    out = []
    for name in net.species:
        emb = species_embedding(net, name)
        if emb.r == T + 1 and is_T_alternating(emb, T):
            out.append((name, emb))
    return out


# --------------------------------------------------------------------------- per-shape rules


def _one_species(net, shape) -> Classification:
    idx = find_alternating_subnetwork(net, 2)
    if idx is not None:
        sub = net.subnetwork(idx)
        return Classification(Verdict.NONDEG_MSS, shape, [
            Evidence("one-species", "Proposition: 1 species"),
            Evidence("alternating-subnetwork", f"subnetwork {_compact(sub)} is 2-alternating",
                     {"reactions": list(idx)})])
    return Classification(Verdict.NOT_MSS, shape, [
        Evidence("one-species", "Proposition: 1 species; no 2-alternating subnetwork"),
        Evidence("nondegeneracy-conjecture-one-species",
                 "not nondegenerately multistationary; the nondegeneracy conjecture holds for one species")],
        caveat="a multistationary network without a 2-alternating subnetwork would have to admit "
               "infinitely many positive steady states; that sub-case is not separated")


def _box_matches(net: ReactionNetwork) -> list[tuple[tuple[str, str], Fraction]]:
    hits = []
    for pair in combinations(net.species, 2):
        try:
            box = box_diagram(net, pair)
        except ValueError:
            continue
        tag, slope = zigzag_class(box)
        if tag == ZigzagClass.ZIGZAG:
            hits.append((pair, slope))
    return hits


def _two_irrev(net, shape) -> Classification:
    hits = _box_matches(net)
    ev = [Evidence("two-reactions", "Proposition: 2 reactions")]
    if len(hits) >= 2 or (len(hits) == 1 and hits[0][1] != -1):
        pair, slope = hits[0]
        ev.append(Evidence("zigzag", f"box diagram on ({pair[0]},{pair[1]}) is a zigzag; diagonal slope={_fmt_q(slope)}",
                           {"pairs": [[list(p), s] for p, s in hits]}))
        return Classification(Verdict.NONDEG_MSS, shape, ev)
    if hits:
        ev.append(Evidence("zigzag-slope-minus-one",
                           f"only zigzag box ({hits[0][0][0]},{hits[0][0][1]}) has diagonal slope -1; "
                           "not nondegenerately multistationary, multistationarity undecided"))
        return Classification(Verdict.UNKNOWN, shape, ev)
    ev.append(Evidence("no-zigzag", "no coordinate projection is a zigzag box; "
                                    "the nondegeneracy conjecture holds for two reactions"))
    return Classification(Verdict.NOT_MSS, shape, ev,
                          caveat="excludes multistationarity unless infinitely many positive steady states occur")


def _rev_plus_irrev(net, shape) -> Classification:
    ev = [Evidence("theorem-rev-irrev", "Theorem: 2-species, 1 rev + 1 irrev")]
    lam = _pair_lambda(net)
    alt = _alternating_species(net, 2)
    if lam is not None and alt:
        name, emb = alt[0]
        ev.append(Evidence("alternating-embedding", f"embedded {_compact(emb)} is 2-alternating",
                           {"species": name}))
        ev.append(Evidence("scalar-multiple", f"lambda={_fmt_q(lam)}", {"lambda": lam}))
        return Classification(Verdict.NONDEG_MSS, shape, ev)
    ev.append(Evidence("prior-theorem", _why_not(lam, alt, 2) + "; not multistationary by the prior classification "
                                                                "of one rev pair + one irrev"))
    return Classification(Verdict.NOT_MSS, shape, ev)


def _why_not(lam, alt, T) -> str:
    if lam is None:
        return "reaction vectors are not scalar multiples"
    return f"no 1-species embedding is {T}-alternating"


def _arrow_pattern_subnetwork(net: ReactionNetwork) -> Optional[tuple[int, ...]]:
    """One pair plus one direction of the other pair forming '<-> ->' or '<- <->'."""
    pairs = net.reversible_pairs()
    for keep, other in ((pairs[0], pairs[1]), (pairs[1], pairs[0])):
        for k in other:
            idx = tuple(sorted(list(keep) + [k]))
            sub = net.subnetwork(idx)
            if same_stoichiometric_subspace(sub, net) and _alternating_species(sub, 2):
                return idx
    return None


def _two_rev(net, shape) -> Classification:
    ev = [Evidence("theorem-two-rev", "Theorem: 2-species, 2 rev")]
    lam = _pair_lambda(net)
    alt = _alternating_species(net, 3)
    if lam is not None and alt:
        name, emb = alt[0]
        ev.append(Evidence("alternating-embedding", f"embedded {_compact(emb)} is 3-alternating", {"species": name}))
        ev.append(Evidence("scalar-multiple", f"lambda={_fmt_q(lam)}", {"lambda": lam}))
        idx = _arrow_pattern_subnetwork(net)
        if idx is not None:
            ev.append(Evidence("lifting-subnetwork",
                               f"subnetwork {_compact(net.subnetwork(idx))} lifts", {"reactions": list(idx)}))
        return Classification(Verdict.NONDEG_MSS, shape, ev)
    ev.append(Evidence("prior-theorem", _why_not(lam, alt, 3) + "; not multistationary by the prior classification "
                                                                "of two rev pairs"))
    return Classification(Verdict.NOT_MSS, shape, ev)


def _multi_species(net, shape, budget) -> Classification:
    ev = [Evidence("heuristic", "multi-species reduction (heuristic)")]
    lam = _pair_lambda(net)
    alt = _alternating_species(net, 2)
    if lam is None or not alt:
        ev.append(Evidence("prior-theorem", _why_not(lam, alt, 2) + "; not multistationary by the prior "
                                                                    "classification of one rev pair + one irrev"))
        return Classification(Verdict.NOT_MSS, shape, ev)
    red = reduce_multispecies(net)
    if red is not None:
        ev.append(Evidence("reduction", f"reduces to {_compact(red.network)}, which is nondegenerately "
                                        "multistationary", {"signs": red.signs, "pivot": red.pivot}))
        return Classification(Verdict.NONDEG_MSS, shape, ev, heuristic=True)
    from .witness import witness_search

    cert = witness_search(net, budget)
    if cert is not None:
        ev.append(Evidence("witness", f"verified witness ({cert.construction})"))
        return Classification(Verdict.NONDEG_MSS, shape, ev, heuristic=True, certificate=cert)
    ev.append(Evidence("undecided", "reduction does not apply and no witness found within budget"))
    return Classification(Verdict.UNKNOWN, shape, ev, heuristic=True)


# --------------------------------------------------------------------------- public API


def classify(net: ReactionNetwork, budget: Optional[int] = None) -> Classification:
    """Dispatch ``net`` to the matching theorem.  ``budget`` only matters for
    the multi-species fallback search."""
    shape = detect_shape(net)
    tag = shape.tag
    if tag == ShapeTag.ONE_SPECIES:
        return _one_species(net, shape)
    if tag == ShapeTag.ONE_REACTION_OR_REV_PAIR:
        return Classification(Verdict.NOT_MSS, shape, [
            Evidence("one-reaction", "Proposition: one reaction or one reversible pair is never multistationary")])
    if net.r + net.s <= 3:  # unreachable after the two rules above; kept for the table row
        return Classification(Verdict.NOT_MSS, shape, [Evidence("small", "r + s <= 3")])
    if tag == ShapeTag.TWO_IRREV:
        return _two_irrev(net, shape)
    if tag == ShapeTag.TWO_SPECIES_REV_PLUS_IRREV:
        return _rev_plus_irrev(net, shape)
    if tag == ShapeTag.TWO_SPECIES_TWO_REV:
        return _two_rev(net, shape)
    if tag == ShapeTag.MULTI_SPECIES_RANK1:
        from .witness import DEFAULT_BUDGET

        return _multi_species(net, shape, DEFAULT_BUDGET if budget is None else budget)
    return Classification(Verdict.OUT_OF_SCOPE, shape, [
        Evidence("out-of-scope", "no classification result covers this shape")])


def _base_case_nondeg(net: ReactionNetwork) -> Optional[Classification]:
    shape = detect_shape(net)
    if shape.tag in (ShapeTag.MULTI_SPECIES_RANK1, ShapeTag.OTHER):
        return None
    c = classify(net)
    return c if c.verdict == Verdict.NONDEG_MSS else None


@dataclass
class LiftResult:
    indices: tuple[int, ...]
    subnetwork: ReactionNetwork
    sub_classification: Classification
    certificate: object = None  # extended certificate on the full network
    evidence: Optional[Evidence] = None


def _subsets(net: ReactionNetwork):
    """Largest subsets first; rev pair + irreversible shapes lead within a size."""
    for size in range(net.r - 1, 1, -1):
        idx = list(combinations(range(net.r), size))
        idx.sort(key=lambda t: detect_shape(net.subnetwork(t)).tag != ShapeTag.TWO_SPECIES_REV_PLUS_IRREV)
        yield from idx


def lift_from_subnetwork(net: ReactionNetwork, budget: Optional[int] = None,
                         certify: bool = True) -> Optional[LiftResult]:
    """A proper subnetwork with the same stoichiometric subspace that a base
    case classifies as nondegenerately multistationary.

    With ``certify`` the subnetwork witness is extended to ``net`` (dropped
    reactions get small positive rates) and re-verified; subsets whose
    certificate does not survive are skipped.
    """
    from .witness import extend_certificate, witness_search

    for idx in _subsets(net):
        sub = net.subnetwork(idx)
        if not same_stoichiometric_subspace(sub, net):
            continue
        c = _base_case_nondeg(sub)
        if c is None:
            continue
        ev = Evidence("lifting", f"subnetwork {_compact(sub)} is nondegenerately multistationary "
                                 "and has the same stoichiometric subspace",
                      {"reactions": list(idx), "subnetwork": format_network(sub)})
        if not certify:
            return LiftResult(tuple(idx), sub, c, None, ev)
        sub_cert = witness_search(sub, budget)
        if sub_cert is None:
            continue
        cert = extend_certificate(net, sub_cert, construction=f"lift({sub_cert.construction})")
        if cert is not None:
            return LiftResult(tuple(idx), sub, c, cert, ev)
    return None


# --------------------------------------------------------------------------- multi-species reduction


@dataclass
class ReducedProblem:
    """Two-species form of a rank-1 network whose species all move with
    (+1) or against (-1) the pivot at unit rate.

    Co-moving species get total 0 and the others a common total T, so every
    reaction term becomes a^alpha (T - a)^beta.  ``terms`` lists
    (reaction index, pivot change, alpha, beta); ``network`` is the 2-species
    network (pivot, E) with the same reduced steady-state equation up to the
    rescaling recorded in ``scale`` (x_E = T' - scale*a with T' = scale*T).
    """

    pivot: str
    signs: dict[str, int]
    network: ReactionNetwork
    reaction_map: tuple[int, ...]
    terms: tuple[tuple[int, int, int, int], ...]
    scale: Fraction

    def polynomial(self, kappa: Sequence, T) -> UniPoly:
        T = Fraction(T)
        base = UniPoly([T, -1])
        out = UniPoly()
        for k, c, alpha, beta in self.terms:
            out = out + UniPoly.monomial(alpha, Fraction(kappa[k]) * c) * base ** beta
        return out


def _reduced_name(net: ReactionNetwork) -> str:
    name = "E"
    while name in net.species:
        name += "x"
    return name


def reduce_multispecies(net: ReactionNetwork) -> Optional[ReducedProblem]:
    """Reduce a rank-1 network to a 2-species one (see :class:`ReducedProblem`).

    Returns None unless every species changes at unit rate relative to the
    pivot and the reduced network is a rev pair + irreversible network
    that the 2-species classification declares nondegenerately
    multistationary.  A genuinely 2-species network reduces to itself.
    """
    if stoich_data(net).rank != 1:
        return None
    if net.s == 2:
        return ReducedProblem(net.species[0], {n: 0 for n in net.species}, net, tuple(range(net.r)), (),
                              Fraction(1))
    if net.s < 2:
        return None
    v = next(net.reaction_vector(k) for k in range(net.r) if any(net.reaction_vector(k)))
    candidates = [name for name, _ in _alternating_species(net, 2)] or list(net.species)
    for pivot in candidates:
        p = net.species.index(pivot)
        if v[p] == 0 or any(abs(x) != abs(v[p]) for x in v):
            continue
        signs = {n: (1 if x * v[p] > 0 else -1) for n, x in zip(net.species, v)}
        n_plus = sum(1 for s in signs.values() if s > 0)
        n_minus = net.s - n_plus
        if n_minus == 0:
            continue
        e = _reduced_name(net)

        def fold(c: Complex) -> Complex:
            alpha = sum(c.coeff(n) for n in net.species if signs[n] > 0)
            beta = sum(c.coeff(n) for n in net.species if signs[n] < 0)
            return Complex([(pivot, alpha), (e, beta)])

        reactions = []
        index = {}
        rmap = []
        terms = []
        for k, rx in enumerate(net.reactions):
            red = Reaction(fold(rx.reactant), fold(rx.product))
            if red.reactant == red.product:
                break
            if red not in index:
                index[red] = len(reactions)
                reactions.append(red)
            rmap.append(index[red])
            y = rx.reactant
            terms.append((k, net.reaction_vector(k)[p],
                          sum(y.coeff(n) for n in net.species if signs[n] > 0),
                          sum(y.coeff(n) for n in net.species if signs[n] < 0)))
        else:
            if len(reactions) != net.r:
                continue
            red_net = ReactionNetwork.from_reactions(reactions, (pivot, e))
            if detect_shape(red_net).tag != ShapeTag.TWO_SPECIES_REV_PLUS_IRREV:
                continue
            if _rev_plus_irrev(red_net, detect_shape(red_net)).verdict != Verdict.NONDEG_MSS:
                continue
            return ReducedProblem(pivot, signs, red_net, tuple(rmap), tuple(terms),
                                  Fraction(n_minus, n_plus))
    return None
