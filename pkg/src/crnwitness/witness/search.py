"""Top-level witness search: shape-specific constructions first, then the
generic prescribed-root grid."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Optional

from ..netparse import ReactionNetwork
from ..structure import same_stoichiometric_subspace, stoich_data
from .certificate import WitnessCertificate
from .constructions import (
    DEFAULT_BUDGET,
    BudgetExhausted,
    _budget,
    _share,
    certify,
    extend_certificate,
    theorem35_frames,
    witness_generic,
    witness_one_species,
    witness_theorem35,
)
from .substitution import ShapeError

__all__ = ["witness_search", "reduce_and_witness", "witness_two_pairs"]


def _attempt(fn, *args):
    try:
        return fn(*args)
    except ShapeError:
        return None


def witness_two_pairs(net: ReactionNetwork, budget=None) -> Optional[WitnessCertificate]:
    """Two reversible pairs: certify a '<-> ->' subnetwork (one pair plus
    one direction of the other) and extend the dropped reaction."""
    budget = _budget(budget)
    pairs = net.reversible_pairs()
    if net.s != 2 or len(pairs) != 2 or net.r != 4:
        raise ShapeError("not a two-reversible-pair network on two species")
    for keep, other in ((pairs[0], pairs[1]), (pairs[1], pairs[0])):
        for k in other:
            sub = net.subnetwork(list(keep) + [k])
            if not theorem35_frames(sub) or not same_stoichiometric_subspace(sub, net):
                continue
            cert = _attempt(witness_theorem35, sub, budget)
            if cert is None:
                continue
            out = extend_certificate(net, cert, construction=f"two-pairs-lift({cert.construction})")
            if out is not None:
                return out
    raise ShapeError("no '<-> ->' subnetwork could be certified")


def reduce_and_witness(net: ReactionNetwork, budget=DEFAULT_BUDGET) -> Optional[WitnessCertificate]:
    """Multi-species rank-1 networks: reduce to two species when the totals
    choice of the reduction applies, otherwise search the totals directly."""
    from ..classify import reduce_multispecies

    budget = _budget(budget)
    if net.s <= 2:
        return witness_search(net, budget)
    red = reduce_multispecies(net)
    if red is not None:
        try:
            sub_cert = witness_theorem35(red.network, budget)
        except (ShapeError, BudgetExhausted):
            sub_cert = None
        if sub_cert is not None:
            # reduced x_E = T' - c*a with T' = c*T; a reduced E pivot records T_A = T directly
            other = next(n for n in sub_cert.totals if n != sub_cert.substitution.pivot)
            T = sub_cert.totals[other]
            if sub_cert.substitution.pivot == red.pivot:
                T = T / red.scale
            kappa_red = sub_cert.kappa_by_reaction()
            kappa = [kappa_red[str(red.network.reactions[red.reaction_map[k]])] * red.scale ** beta
                     for k, _, _, beta in red.terms]
            totals = {n: (Fraction(0) if sgn > 0 else T) for n, sgn in red.signs.items() if n != red.pivot}
            cert = certify(net, kappa, totals, red.pivot, "multispecies-reduction",
                           [f"reduced to {red.network}; totals 0 on co-moving species, T={T} on the others"])
            if cert is not None:
                return cert
    # fallback: independent totals, pivots led by species with an alternating embedding
    from ..classify import _alternating_species

    lead = [n for n, _ in _alternating_species(net, 2)]
    pivots = lead + [n for n in net.species if n not in lead]
    try:
        for i, p in enumerate(pivots):
            share = budget.child(_share(budget, len(pivots) - i)) if budget.limit is not None else _budget(None)
            try:
                cert = witness_generic(net, share, p, construction="generic-grid")
            except ShapeError:
                cert = None
            budget.charge(share)
            if cert is not None:
                return cert
    except BudgetExhausted:
        pass
    return None


def witness_search(net: ReactionNetwork, budget=DEFAULT_BUDGET) -> Optional[WitnessCertificate]:
    """First verified certificate for ``net`` or None.

    ``budget`` caps the number of candidate parameter points across all
    constructions; 0 means nothing is attempted and None removes the cap.
    """
    budget = _budget(budget)
    if budget.limit is not None and budget.limit <= 0:
        return None
    if net.r < 2 or stoich_data(net).rank != 1:
        return None
    try:
        if net.s >= 3:
            return reduce_and_witness(net, budget)
        special = None
        if net.s == 1:
            special = witness_one_species
        elif net.s == 2 and net.r == 3 and theorem35_frames(net):
            special = witness_theorem35
        elif net.s == 2 and net.r == 4 and len(net.reversible_pairs()) == 2:
            special = witness_two_pairs
        if special is not None:
            share = budget.child(_share(budget, 2))
            try:
                cert = _attempt(special, net, share)
            except BudgetExhausted:
                cert = None
            budget.charge(share)
            if cert is not None:
                return cert
        if net.r > 2:
            # lifting from a two-reaction subnetwork with the same subspace
            for i, j in combinations(range(net.r), 2):
                sub = net.subnetwork((i, j))
                if not same_stoichiometric_subspace(sub, net):
                    continue
                share = budget.child(_share(budget, 4))
                c = witness_generic(sub, share)
                budget.charge(share)
                if c is not None:
                    out = extend_certificate(net, c, construction="two-reaction-lift")
                    if out is not None:
                        return out
        return witness_generic(net, budget)
    except BudgetExhausted:
        return None
