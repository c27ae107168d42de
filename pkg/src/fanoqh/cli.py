"""Command-line front end: ``fanoqh <subcommand> [options]``.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import cells, chow, quantum, spectra, verify
from .algebra.poly import format_poly
from .algebra.unipoly import RootFindingError, format_unipoly
from .chow import LABELS, RANK, ChowError


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def _class(text: str) -> chow.ChowClass:
    try:
        return chow.parse_class(text)
    except ChowError as exc:
        raise UsageError(str(exc)) from exc


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    try:
        golden = verify.load_golden(args.golden)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read golden file: {exc}") from exc
    results = verify.run_checks(golden)
    if args.format == "json":
        print(json.dumps([{"check": r.name, "passed": r.passed, "detail": r.detail} for r in results], indent=1))
    else:
        for r in results:
            print(r.line())
        failed = [r.name for r in results if not r.passed]
        print(f"{len(results) - len(failed)}/{len(results)} checks passed" + (f"; failed: {', '.join(failed)}" if failed else ""))
    return 0 if all(r.passed for r in results) else 1


def cmd_table(args) -> int:
    if args.kind == "classical":
        table = chow.chow_ring().table
        cell = lambda x, k: str(x.coords[k])  # noqa: E731
        raw = lambda x, k: str(x.coords[k])  # noqa: E731
    else:
        table = quantum.qh_setup().table
        cell = lambda x, k: format_unipoly(x.coords[k], "q")  # noqa: E731
        raw = lambda x, k: [str(c) for c in x.coords[k].coeffs]  # noqa: E731
    if args.format == "json":
        products = [
            {"left": LABELS[i], "right": LABELS[j], "coords": [raw(table[i][j], k) for k in range(RANK)]}
            for i in range(RANK)
            for j in range(RANK)
        ]
        text = json.dumps({"kind": args.kind, "basis": list(LABELS), "products": products}, indent=1) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["left", "right"] + list(LABELS))
        for i in range(RANK):
            for j in range(RANK):
                w.writerow([LABELS[i], LABELS[j]] + [cell(table[i][j], k) for k in range(RANK)])
        text = buf.getvalue()
    else:
        raise UsageError("table supports --format csv or json")
    _emit(text, args.out)
    return 0


def cmd_gw(args) -> int:
    a, b, c = _class(args.a), _class(args.b), _class(args.c)
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    for x, name in ((a, args.a), (b, args.b), (c, args.c)):
        if not x.is_homogeneous():
            raise UsageError(f"class {name!r} is not homogeneous")
    print(quantum.gw(a, b, c, args.n))
    return 0


def cmd_eigen(args) -> int:
    qv = _rational(args.q)
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    try:
        report = spectra.c1_spectrum(spectra.specialize(qv), args.tol)
    except RootFindingError as exc:
        print(f"root finding failed: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        text = json.dumps(report.to_json(), indent=1) + "\n"
    elif args.format == "svg":
        text = spectra.to_svg(report)
    elif args.format == "text":
        lines = [
            f"q = {report.q_value}",
            f"char poly: {format_unipoly(report.char_poly)}",
            "squarefree parts: " + "; ".join(f"({format_unipoly(f)})^{m}" for f, m in report.squarefree_parts),
            "eigenvalues:",
        ]
        lines += [f"  {r.re:+.15f} {r.im:+.15f}i  x{r.multiplicity}" for r in report.roots]
        lines += [
            f"trace form det: {report.trace_gram_det}",
            f"semisimple: {report.semisimple}",
            f"generalized 0-eigenspace dimension: {report.zero_eigenvalue_length}",
        ]
        text = "\n".join(lines) + "\n"
    else:
        raise UsageError("eigen supports --format json, text or svg")
    _emit(text, args.out)
    return 0


def cmd_chevalley(args) -> int:
    rows = [(label, quantum.to_cell_terms(x)) for label, x in quantum.chevalley_table()]
    if args.format == "json":
        data = {label: [[str(c), n, t] for c, n, t in terms] for label, terms in rows}
        text = json.dumps(data, indent=1) + "\n"
    else:
        text = "".join(f"c1 * {label} = {quantum.format_cell_terms(terms)}\n" for label, terms in rows)
    _emit(text, args.out)
    return 0


def cmd_quantize(args) -> int:
    x = _class(args.cls)
    if not x.is_homogeneous():
        raise UsageError("quantize needs a homogeneous class")
    print(format_poly(quantum.quantize(x)))
    return 0


def cmd_poset(args) -> int:
    text = cells.hasse_poset().render() + "\n\n" + cells.render_diagram() + "\n"
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fanoqh", description="Chow ring and quantum cohomology calculator")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="run the verification suite")
    s.add_argument("--golden", help="alternative golden-constants JSON file")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("table", help="dump a multiplication table")
    s.add_argument("--kind", choices=["classical", "quantum"], default="quantum")
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.add_argument("--out")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("gw", help="evaluate a three-point invariant")
    for name in ("a", "b", "c"):
        s.add_argument(f"--{name}", required=True, help="label, monomial or 13 coordinates")
    s.add_argument("--n", type=int, required=True, help="curve degree")
    s.set_defaults(func=cmd_gw)

    s = sub.add_parser("eigen", help="eigenvalues of c1 at a value of q")
    s.add_argument("--q", default="1")
    s.add_argument("--tol", type=float, default=spectra.DEFAULT_TOL)
    s.add_argument("--format", choices=["json", "text", "svg"], default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_eigen)

    s = sub.add_parser("chevalley", help="quantum Chevalley formulas in the cell basis")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.add_argument("--out")
    s.set_defaults(func=cmd_chevalley)

    s = sub.add_parser("quantize", help="polynomial representing a class in the quantum ring")
    s.add_argument("--class", dest="cls", required=True)
    s.set_defaults(func=cmd_quantize)

    s = sub.add_parser("poset", help="closure poset of the cells and the c1 diagram")
    s.add_argument("--out")
    s.set_defaults(func=cmd_poset)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
