"""Reaction network data model and text grammar.

A network file holds reactions separated by ``;`` or newlines::

    0 <-> A + B
    2A + B -> 3A + 2B

``<->`` expands into two mutually reverse reactions, ``<-`` is normalized
by swapping sides, and a complex is either ``0`` or ``+``-separated terms
``[<uint>]<Species>``.  Several networks can share one file when separated
by a line holding only ``---``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

__all__ = [
    "Complex",
    "Reaction",
    "ReactionNetwork",
    "ParseError",
    "parse_network",
    "parse_networks",
    "format_network",
    "format_complex",
    "validate",
]

_SPECIES_RE = re.compile(r"[A-Z][A-Za-z0-9]*")
_TERM_RE = re.compile(r"\s*(\d*)\s*([A-Z][A-Za-z0-9]*)\s*$")
_ARROW_RE = re.compile(r"<->|<-|->")


class ParseError(ValueError):
    """Syntax or structural error in network text, with 1-based position."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


class Complex:
    """Nonnegative-integer combination of species.

    Term order is kept as written (for printing); equality and hashing
    ignore it.  Zero coefficients are dropped, so ``Complex()`` is ``0``.
    """

    __slots__ = ("terms", "_key")

    def __init__(self, terms: Iterable[tuple[str, int]] | Mapping[str, int] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        merged: dict[str, int] = {}
        for name, coeff in terms:
            if coeff < 0:
                raise ValueError(f"negative coefficient for {name}")
            merged[name] = merged.get(name, 0) + int(coeff)
        self.terms = tuple((n, c) for n, c in merged.items() if c)
        self._key = frozenset(self.terms)

    def coeff(self, name: str) -> int:
        for n, c in self.terms:
            if n == name:
                return c
        return 0

    def vector(self, species: Iterable[str]) -> tuple[int, ...]:
        return tuple(self.coeff(s) for s in species)

    @property
    def species(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.terms)

    def restrict(self, keep) -> "Complex":
        return Complex([(n, c) for n, c in self.terms if n in keep])

    def __eq__(self, other):
        return isinstance(other, Complex) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Complex({format_complex(self)!r})"


@dataclass(frozen=True)
class Reaction:
    reactant: Complex
    product: Complex

    def reversed(self) -> "Reaction":
        return Reaction(self.product, self.reactant)

    def __str__(self):
        return f"{format_complex(self.reactant)} -> {format_complex(self.product)}"


@dataclass(frozen=True)
class ReactionNetwork:
    """Species in first-appearance order plus an ordered reaction list.

    Reversible pairs are two stored reactions that are each other's
    reverse; :meth:`reverse_of` exposes the pairing.
    """

    species: tuple[str, ...]
    reactions: tuple[Reaction, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "species", tuple(self.species))
        object.__setattr__(self, "reactions", tuple(self.reactions))
        index = {}
        for k, rx in enumerate(self.reactions):
            index.setdefault(rx, k)
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_reactions(cls, reactions: Iterable[Reaction], order: Iterable[str] = ()) -> "ReactionNetwork":
        """Build a network, ordering species by ``order`` then by appearance."""
        reactions = tuple(reactions)
        seen: list[str] = []
        present = {n for rx in reactions for c in (rx.reactant, rx.product) for n in c.species}
        for name in order:
            if name in present and name not in seen:
                seen.append(name)
        for rx in reactions:
            for c in (rx.reactant, rx.product):
                for name in c.species:
                    if name not in seen:
                        seen.append(name)
        return cls(tuple(seen), reactions)

    @property
    def s(self) -> int:
        return len(self.species)

    @property
    def r(self) -> int:
        return len(self.reactions)

    def index_of(self, reaction: Reaction) -> int | None:
        return self._index.get(reaction)

    def reverse_of(self, k: int) -> int | None:
        return self._index.get(self.reactions[k].reversed())

    def reversible_pairs(self) -> list[tuple[int, int]]:
        pairs = []
        for k in range(self.r):
            j = self.reverse_of(k)
            if j is not None and k < j:
                pairs.append((k, j))
        return pairs

    def irreversible(self) -> list[int]:
        return [k for k in range(self.r) if self.reverse_of(k) is None]

    def reactant_vector(self, k: int) -> tuple[int, ...]:
        return self.reactions[k].reactant.vector(self.species)

    def product_vector(self, k: int) -> tuple[int, ...]:
        return self.reactions[k].product.vector(self.species)

    def reaction_vector(self, k: int) -> tuple[int, ...]:
        y = self.reactant_vector(k)
        yp = self.product_vector(k)
        return tuple(b - a for a, b in zip(y, yp))

    def subnetwork(self, keep: Iterable[int]) -> "ReactionNetwork":
        keep = sorted(set(keep))
        return ReactionNetwork.from_reactions([self.reactions[k] for k in keep], self.species)

    def __str__(self):
        return format_network(self) if self.reactions else "<empty network>"


# --------------------------------------------------------------------------- parsing


def _parse_complex(text: str, line: int, col: int) -> Complex:
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty complex", line, col)
    if stripped == "0":
        return Complex()
    terms = []
    offset = 0
    for piece in text.split("+"):
        m = _TERM_RE.match(piece)
        if not m or not piece.strip():
            lead = len(piece) - len(piece.lstrip())
            raise ParseError(f"bad term {piece.strip()!r}", line, col + offset + lead)
        coeff = int(m.group(1)) if m.group(1) else 1
        if coeff == 0:
            raise ParseError(f"zero coefficient in {piece.strip()!r}", line, col + offset)
        terms.append((m.group(2), coeff))
        offset += len(piece) + 1
    return Complex(terms)


def _statements(text: str):
    """Yield (statement, line, column) for every nonblank statement."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        start = 0
        for part in line.split(";"):
            if part.strip():
                lead = len(part) - len(part.lstrip())
                yield part, lineno, start + lead + 1
            start += len(part) + 1


def parse_network(text: str) -> ReactionNetwork:
    """Parse one network.  Raises :class:`ParseError` on any problem."""
    reactions: list[Reaction] = []
    seen: dict[Reaction, tuple[int, int]] = {}
    for stmt, line, col in _statements(text):
        arrows = list(_ARROW_RE.finditer(stmt))
        if not arrows:
            raise ParseError("expected '->', '<-' or '<->'", line, col)
        if len(arrows) > 1:
            raise ParseError("more than one arrow", line, col + arrows[1].start())
        m = arrows[0]
        lhs = _parse_complex(stmt[: m.start()], line, col)
        rhs = _parse_complex(stmt[m.end():], line, col + m.end())
        arrow = m.group(0)
        if lhs == rhs:
            raise ParseError("diagonal reaction (reactant equals product)", line, col)
        if arrow == "->":
            new = [Reaction(lhs, rhs)]
        elif arrow == "<-":
            new = [Reaction(rhs, lhs)]
        else:
            new = [Reaction(lhs, rhs), Reaction(rhs, lhs)]
        for rx in new:
            if rx in seen:
                raise ParseError(f"duplicate reaction {rx}", line, col)
            seen[rx] = (line, col)
            reactions.append(rx)
    if not reactions:
        raise ParseError("no reactions")
    return ReactionNetwork.from_reactions(reactions)


def parse_networks(text: str) -> list[ReactionNetwork]:
    """Parse a batch file of ``---``-separated networks.

    Line numbers in errors refer to the whole file.
    """
    blocks: list[list[str]] = [[]]
    starts = [0]
    for i, raw in enumerate(text.splitlines()):
        if raw.strip() == "---":
            blocks.append([])
            starts.append(i + 1)
        else:
            blocks[-1].append(raw)
    nets = []
    for block, start in zip(blocks, starts):
        body = "\n".join(block)
        if not body.strip():
            continue
        try:
            nets.append(parse_network(body))
        except ParseError as exc:
            line = exc.line + start if exc.line else 0
            raise ParseError(exc.message, line, exc.column) from None
    if not nets:
        raise ParseError("no reactions")
    return nets


# --------------------------------------------------------------------------- formatting


def format_complex(c: Complex, compact: bool = False) -> str:
    if not c.terms:
        return "0"
    sep = "+" if compact else " + "
    return sep.join(f"{n}" if k == 1 else f"{k}{n}" for n, k in c.terms)


def format_network(net: ReactionNetwork, compact: bool = False) -> str:
    """Inverse of :func:`parse_network`; reversible pairs collapse to ``<->``."""
    if not net.reactions:
        raise ValueError("no reactions")
    arrow, rev, sep = ("->", "<->", "; ") if compact else (" -> ", " <-> ", "; ")
    out = []
    done = set()
    for k, rx in enumerate(net.reactions):
        if k in done:
            continue
        j = net.reverse_of(k)
        lhs = format_complex(rx.reactant, compact)
        rhs = format_complex(rx.product, compact)
        if j is not None and j > k:
            done.add(j)
            out.append(f"{lhs}{rev}{rhs}")
        else:
            out.append(f"{lhs}{arrow}{rhs}")
    return sep.join(out)


def validate(net: ReactionNetwork) -> list[str]:
    """Return invariant violations; an empty list means the network is valid."""
    problems = []
    if not net.reactions:
        problems.append("no reactions")
    seen = set()
    for rx in net.reactions:
        if rx.reactant == rx.product:
            problems.append("diagonal reaction")
        if rx in seen:
            problems.append("duplicate reaction")
        seen.add(rx)
    used = {n for rx in net.reactions for c in (rx.reactant, rx.product) for n in c.species}
    for name in net.species:
        if not _SPECIES_RE.fullmatch(name):
            problems.append(f"bad species name {name!r}")
        if name not in used:
            problems.append(f"species {name} appears in no reaction")
    if len(set(net.species)) != len(net.species):
        problems.append("duplicate species")
    for name in used - set(net.species):
        problems.append(f"species {name} missing from species list")
    return problems
