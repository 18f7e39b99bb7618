"""Batch command-line front end.

Exit codes: 0 success, 2 parse error, 3 refused (``--strict`` met an
OUT_OF_SCOPE verdict, or a witness was requested for a network not
classified NONDEG_MSS without ``--force``), 4 witness budget exhausted,
5 certificate verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional

from . import __version__
from .classify import Classification, ShapeTag, Verdict, classify
from .netparse import ParseError, ReactionNetwork, format_network, parse_networks
from .witness import (
    DEFAULT_BUDGET,
    CertificateFormatError,
    WitnessCertificate,
    dumps,
    load,
    verify_certificate,
    witness_search,
)

REPORT_SCHEMA = "crnwitness.report/1"

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_REFUSED = 3
EXIT_BUDGET = 4
EXIT_VERIFY = 5


def _q(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _result(source: str, index: int, net: ReactionNetwork, c: Classification, ms: float,
            certificate: Optional[dict] = None) -> dict:
    return {
        "source": source,
        "index": index,
        "network": format_network(net),
        "shape": {"tag": c.shape.tag.value, "s": c.shape.s, "r": c.shape.r},
        "verdict": c.verdict.value,
        "summary": c.summary(),
        "evidence": [e.to_dict() for e in c.evidence],
        "caveat": c.caveat,
        "heuristic": c.heuristic,
        "certificate": certificate,
        "timing_ms": round(ms, 3),
    }


def _report(command: str, results: list, errors: list, extra: Optional[dict] = None) -> dict:
    out = {"schema": REPORT_SCHEMA, "version": __version__, "command": command,
           "results": results, "errors": errors}
    if extra:
        out.update(extra)
    return out


def _parse_error(source: str, exc: ParseError) -> dict:
    return {"source": source, "line": exc.line, "column": exc.column, "message": exc.message}


def _read_networks(path: str) -> list[ReactionNetwork]:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_networks(text)


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _err(msg: str):
    print(f"crnwitness: {msg}", file=sys.stderr)


# --------------------------------------------------------------------------- commands


def cmd_classify(args) -> int:
    results, errors, lines = [], [], []
    code = EXIT_OK
    for path in args.files:
        try:
            nets = _read_networks(path)
        except ParseError as exc:
            errors.append(_parse_error(path, exc))
            _err(f"{path}: {exc}")
            code = EXIT_PARSE
            continue
        except OSError as exc:
            errors.append({"source": path, "line": 0, "column": 0, "message": str(exc)})
            _err(f"{path}: {exc.strerror or exc}")
            code = EXIT_PARSE
            continue
        for i, net in enumerate(nets):
            t0 = time.perf_counter()
            c = classify(net, args.budget)
            ms = (time.perf_counter() - t0) * 1000
            results.append(_result(path, i, net, c, ms))
            label = path if len(nets) == 1 else f"{path}[{i}]"
            lines.append(f"{label}: {c.summary()}")
            if c.caveat:
                lines.append(f"  caveat: {c.caveat}")
            if args.strict and c.verdict == Verdict.OUT_OF_SCOPE and code == EXIT_OK:
                code = EXIT_REFUSED
    if args.json:
        _emit(json.dumps(_report("classify", results, errors), indent=2) + "\n", args.out)
    elif lines:
        _emit("\n".join(lines) + "\n", args.out)
    return code


def _describe(cert: WitnessCertificate) -> list[str]:
    lines = [f"construction: {cert.construction}"]
    lines += [f"  kappa[{rx}] = {_q(k)}" for rx, k in zip(cert.reactions, cert.kappa)]
    sub = cert.substitution
    lines.append(f"  pivot {sub.pivot}; totals " + ", ".join(f"T[{n}] = {_q(t)}" for n, t in sub.totals.items()))
    for r in cert.roots:
        where = f"exactly {_q(r.exact)}" if r.exact is not None else f"in ({_q(r.lo)}, {_q(r.hi)})"
        lines.append(f"  simple root {where}")
    return lines


def cmd_witness(args) -> int:
    try:
        nets = _read_networks(args.file)
    except ParseError as exc:
        _err(f"{args.file}: {exc}")
        return EXIT_PARSE
    except OSError as exc:
        _err(f"{args.file}: {exc.strerror or exc}")
        return EXIT_PARSE
    if len(nets) != 1:
        _err(f"{args.file}: expected one network, found {len(nets)}")
        return EXIT_PARSE
    net = nets[0]
    c = classify(net, args.budget)
    if c.verdict != Verdict.NONDEG_MSS and not args.force:
        _err(f"refusing to search: {c.summary()} (use --force)")
        return EXIT_REFUSED
    t0 = time.perf_counter()
    cert = c.certificate if c.certificate is not None else witness_search(net, args.budget)
    ms = (time.perf_counter() - t0) * 1000
    if cert is None:
        _err(f"no certificate within budget {args.budget}")
        if args.json:
            _emit(json.dumps(_report("witness", [_result(args.file, 0, net, c, ms)], []), indent=2) + "\n", None)
        return EXIT_BUDGET
    text = dumps(cert)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.json:
        res = _result(args.file, 0, net, c, ms, certificate=cert.to_dict())
        if args.out:
            res["certificate_file"] = args.out
        print(json.dumps(_report("witness", [res], []), indent=2))
    elif args.out:
        print(f"{args.file}: {c.summary()}")
        print("\n".join(_describe(cert)))
        print(f"certificate written to {args.out}")
    else:
        sys.stdout.write(text)
        print("\n".join(_describe(cert)), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        nets = _read_networks(args.network)
    except ParseError as exc:
        _err(f"{args.network}: {exc}")
        return EXIT_PARSE
    except OSError as exc:
        _err(f"{args.network}: {exc.strerror or exc}")
        return EXIT_PARSE
    if len(nets) != 1:
        _err(f"{args.network}: expected one network, found {len(nets)}")
        return EXIT_PARSE
    try:
        cert = load(args.certificate)
    except CertificateFormatError as exc:
        _err(f"{args.certificate}: {exc}")
        return EXIT_PARSE
    except OSError as exc:
        _err(f"{args.certificate}: {exc.strerror or exc}")
        return EXIT_PARSE
    report = verify_certificate(nets[0], cert)
    if args.json:
        print(json.dumps({"schema": REPORT_SCHEMA, "version": __version__, "command": "verify",
                          "passed": report.passed, "failed_step": report.failed_step,
                          "steps": [{"step": n, "ok": ok, "detail": m} for n, ok, m in report.steps]}, indent=2))
    else:
        print(report)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_corpus(args) -> int:
    from .corpus import enumerate_corpus

    results = []
    counts: dict[str, int] = {}
    agree = disagree = 0
    for net in enumerate_corpus(args.max_coeff, args.shape):
        t0 = time.perf_counter()
        c = classify(net, args.budget)
        cert = None
        if c.verdict == Verdict.NONDEG_MSS:
            cert = c.certificate if c.certificate is not None else witness_search(net, args.budget)
            if cert is not None and verify_certificate(net, cert):
                agree += 1
            else:
                disagree += 1
        ms = (time.perf_counter() - t0) * 1000
        counts[c.verdict.value] = counts.get(c.verdict.value, 0) + 1
        res = _result("corpus", len(results), net, c, ms)
        res["witness"] = None if c.verdict != Verdict.NONDEG_MSS else (cert is not None)
        results.append(res)
    total = agree + disagree
    summary = {"networks": len(results), "verdicts": counts, "nondeg_witnessed": agree,
               "nondeg_without_witness": disagree,
               "agreement": 1.0 if total == 0 else agree / total}
    if args.json:
        _emit(json.dumps(_report("corpus", results, [], {"summary": summary}), indent=2) + "\n", args.out)
    else:
        lines = [f"networks: {len(results)}"]
        lines += [f"  {v}: {n}" for v, n in sorted(counts.items())]
        lines.append(f"NONDEG_MSS with verified witness: {agree}/{total} "
                     f"({100 * summary['agreement']:.1f}% agreement)")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if disagree == 0 else EXIT_BUDGET


# --------------------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crnwitness", description=__doc__.split("\n")[0],
                                epilog="exit codes: 0 ok, 2 parse error, 3 refused, 4 budget exhausted, "
                                       "5 verification failed")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def budget(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="N",
                        help=f"candidate parameter points for witness search (default {DEFAULT_BUDGET})")

    c = sub.add_parser("classify", help="classify networks")
    c.add_argument("files", nargs="+", help="network files ('-' for stdin); '---' separates networks")
    c.add_argument("--json", action="store_true", help=f"emit the {REPORT_SCHEMA} JSON report")
    c.add_argument("--strict", action="store_true", help="exit 3 if any verdict is OUT_OF_SCOPE")
    c.add_argument("--out", metavar="FILE", help="write the report to FILE")
    budget(c)
    c.set_defaults(func=cmd_classify)

    w = sub.add_parser("witness", help="search for and write a witness certificate")
    w.add_argument("file")
    w.add_argument("--out", metavar="FILE", help="certificate path (default: certificate to stdout)")
    w.add_argument("--force", action="store_true", help="search even if not classified NONDEG_MSS")
    w.add_argument("--json", action="store_true")
    budget(w)
    w.set_defaults(func=cmd_witness)

    v = sub.add_parser("verify", help="check a certificate against a network")
    v.add_argument("network")
    v.add_argument("certificate")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("corpus", help="classifier/witness agreement on enumerated small networks")
    k.add_argument("--max-coeff", type=int, default=1, metavar="K", help="largest stoichiometric coefficient")
    k.add_argument("--shape", choices=[t.value for t in ShapeTag
                                       if t not in (ShapeTag.OTHER, ShapeTag.ONE_REACTION_OR_REV_PAIR,
                                                    ShapeTag.MULTI_SPECIES_RANK1)])
    k.add_argument("--json", action="store_true")
    k.add_argument("--out", metavar="FILE")
    budget(k)
    k.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
