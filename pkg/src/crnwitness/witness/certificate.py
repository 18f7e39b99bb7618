"""Witness certificates and their JSON file format.

Every rational is written as the string ``"num/den"`` so a certificate
round-trips bit-exactly through :func:`dumps` / :func:`loads`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from ..netparse import ReactionNetwork, format_network, parse_network
from ..realroots import Interval, RootInterval, UniPoly, format_rational, parse_rational
from .substitution import Substitution

__all__ = [
    "CERT_FORMAT",
    "CERT_VERSION",
    "CertificateFormatError",
    "WitnessCertificate",
    "dumps",
    "loads",
    "save",
    "load",
]

CERT_FORMAT = "crnwitness.certificate"
CERT_VERSION = 1


class CertificateFormatError(ValueError):
    pass


def _r(q) -> str:
    return format_rational(q)


def _opt(q) -> Optional[str]:
    return None if q is None else _r(q)


def _q(text) -> Fraction:
    if not isinstance(text, str):
        raise CertificateFormatError(f"expected a 'num/den' string, got {text!r}")
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise CertificateFormatError(str(exc)) from None


def _optq(text) -> Optional[Fraction]:
    return None if text is None else _q(text)


@dataclass
class WitnessCertificate:
    network: str
    reactions: list[str]
    kappa: list[Fraction]
    substitution: Substitution
    poly: UniPoly
    window: Interval
    roots: list[RootInterval]
    construction: str = ""
    notes: list[str] = field(default_factory=list)

    @property
    def totals(self) -> dict[str, Fraction]:
        return self.substitution.totals

    def kappa_by_reaction(self) -> dict[str, Fraction]:
        return dict(zip(self.reactions, self.kappa))

    def parsed_network(self) -> ReactionNetwork:
        return parse_network(self.network)

    @classmethod
    def build(cls, net: ReactionNetwork, kappa, sub: Substitution, poly: UniPoly, window: Interval,
              roots, construction: str = "", notes=()) -> "WitnessCertificate":
        return cls(
            network=format_network(net),
            reactions=[str(rx) for rx in net.reactions],
            kappa=[Fraction(k) for k in kappa],
            substitution=sub,
            poly=poly,
            window=window,
            roots=list(roots),
            construction=construction,
            notes=list(notes),
        )

    def to_dict(self) -> dict:
        sub = self.substitution
        return {
            "format": CERT_FORMAT,
            "version": CERT_VERSION,
            "network": self.network,
            "kappa": [{"reaction": rx, "value": _r(k)} for rx, k in zip(self.reactions, self.kappa)],
            "totals": {n: _r(t) for n, t in sub.totals.items()},
            "substitution": {
                "pivot": sub.pivot,
                "mu": {n: _r(m) for n, m in sub.mu.items()},
                "monomial_exponent": sub.monomial,
            },
            "poly": [_r(c) for c in self.poly.coeffs],
            "window": {
                "lo": _opt(self.window.lo),
                "hi": _opt(self.window.hi),
                "lo_open": self.window.lo_open,
                "hi_open": self.window.hi_open,
            },
            "roots": [
                {"lo": _r(r.lo), "hi": _r(r.hi), "multiplicity": r.multiplicity, "exact": _opt(r.exact)}
                for r in self.roots
            ],
            "construction": self.construction,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "WitnessCertificate":
        try:
            if d.get("format") != CERT_FORMAT:
                raise CertificateFormatError(f"not a certificate (format={d.get('format')!r})")
            if d.get("version") != CERT_VERSION:
                raise CertificateFormatError(f"unsupported certificate version {d.get('version')!r}")
            s = d["substitution"]
            mu = {n: _q(m) for n, m in s["mu"].items()}
            totals = {n: _q(t) for n, t in d["totals"].items()}
            sub = Substitution(s["pivot"], mu, totals, int(s["monomial_exponent"]))
            w = d["window"]
            window = Interval(_optq(w["lo"]), _optq(w["hi"]), bool(w["lo_open"]), bool(w["hi_open"]))
            roots = [RootInterval(_q(r["lo"]), _q(r["hi"]), int(r["multiplicity"]), _optq(r.get("exact")))
                     for r in d["roots"]]
            return cls(
                network=d["network"],
                reactions=[k["reaction"] for k in d["kappa"]],
                kappa=[_q(k["value"]) for k in d["kappa"]],
                substitution=sub,
                poly=UniPoly([_q(c) for c in d["poly"]]),
                window=window,
                roots=roots,
                construction=d.get("construction", ""),
                notes=list(d.get("notes", [])),
            )
        except (KeyError, TypeError) as exc:
            raise CertificateFormatError(f"malformed certificate: {exc}") from None


def dumps(cert: WitnessCertificate) -> str:
    return json.dumps(cert.to_dict(), indent=2, sort_keys=True) + "\n"


def loads(text: str) -> WitnessCertificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    return WitnessCertificate.from_dict(data)


def save(cert: WitnessCertificate, path) -> None:
    Path(path).write_text(dumps(cert), encoding="utf-8")


def load(path) -> WitnessCertificate:
    return loads(Path(path).read_text(encoding="utf-8"))
