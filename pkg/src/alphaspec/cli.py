"""Command-line entry point: ``alphaspec <subcommand> ...``.

Exit status: 0 on success or a passing suite, 1 when a verification fails
(counterexamples are printed), 2 on usage errors (bad graph6, bad alpha,
unreadable file).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from .exactpoly import parse_rational
from .graph import Graph, GraphError, join, parse_graph6, read_graph6_file, to_graph6
from .joins import PreconditionError, coronal_in_mode, forge_cospectral_pair, join_charpoly, verify_certificate
from .spectra import (
    Mode,
    SizeBoundError,
    charpoly_at,
    charpoly_exact,
    eigenvalues,
    invariants_from_charpoly,
    regularity_from_spectrum,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SUITES = ("ds", "le3.1", "le3.2", "lem2.1", "thm3.1", "transfer", "corollary-regression")


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ parsing helpers


def parse_alpha(text: str, warn=True) -> Fraction:
    try:
        a = parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not 0 <= a <= 1:
        raise UsageError(f"alpha must lie in [0, 1], got {text}")
    if warn and "/" not in text and "." in text:
        print(f"warning: decimal alpha {text} read exactly as {a}; prefer p/q", file=sys.stderr)
    return a


def parse_alpha_list(items) -> list[Fraction] | None:
    if not items:
        return None
    out = []
    for item in items:
        out.extend(parse_alpha(t) for t in item.split(",") if t.strip())
    return out


def _graphs_from(args, inline_attr="graph", file_attr="input") -> list[Graph]:
    inline = getattr(args, inline_attr, None) or []
    files = getattr(args, file_attr, None) or []
    if inline and files:
        raise UsageError("give graphs either inline (-g) or from files (--input), not both")
    try:
        if inline:
            return [parse_graph6(s) for s in inline]
        out = []
        for f in files:
            out.extend(read_graph6_file(f))
        return out
    except OSError as exc:
        raise UsageError(f"cannot read {exc.filename}: {exc.strerror}") from None
    except GraphError as exc:
        raise UsageError(f"malformed graph6: {exc}") from None


def _one_graph(text: str, what: str) -> Graph:
    try:
        return parse_graph6(text)
    except GraphError as exc:
        raise UsageError(f"malformed graph6 for {what}: {exc}") from None


def _mode(args) -> Mode:
    alpha = getattr(args, "alpha", None)
    if args.mode == "symbolic":
        if alpha is not None:
            raise UsageError("--mode symbolic takes no --alpha")
        return Mode.symbolic_mode()
    if args.mode == "fixed" and alpha is None:
        raise UsageError("--mode fixed needs --alpha")
    return Mode.symbolic_mode() if alpha is None else Mode.fixed(parse_alpha(alpha))


# ------------------------------------------------------------------ output


def _emit(args, payload, rows=None, text=None):
    """payload: JSON-able object; rows: list of dicts for csv; text: str for text format."""
    fmt = args.format
    if fmt == "json":
        out = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    elif fmt == "csv":
        rows = rows if rows is not None else _flat_rows(payload)
        buf = io.StringIO()
        cols = []
        for r in rows:
            for k in r:
                if k not in cols:
                    cols.append(k)
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
        out = buf.getvalue()
    else:
        out = text if text is not None else json.dumps(payload, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _flat_rows(payload):
    items = payload if isinstance(payload, list) else [payload]
    return [dict(sorted(p.items())) for p in items]


def _single_or_list(records):
    return records[0] if len(records) == 1 else records


# ------------------------------------------------------------------ subcommands


def cmd_charpoly(args):
    mode = _mode(args)
    recs, lines = [], []
    for g in _graphs_from(args):
        if mode.symbolic:
            p = charpoly_exact(g, args.max_n)
        else:
            p = charpoly_at(g, mode.alpha)
        rec = {"g6": to_graph6(g), "mode": mode.kind, "charpoly": p.render(), "coefficients": p.to_json()}
        if not mode.symbolic:
            rec["alpha"] = str(mode.alpha)
        recs.append(rec)
        lines.append(p.render())
    _emit(args, _single_or_list(recs), text="\n".join(lines) + "\n")
    return EXIT_OK


def cmd_spectrum(args):
    alpha = parse_alpha(args.alpha)
    recs, rows, lines = [], [], []
    for g in _graphs_from(args):
        rep = eigenvalues(g, alpha, tol=args.tol)
        rec = {"g6": to_graph6(g), "alpha": str(alpha), **{k: v for k, v in rep.to_json().items() if k != "alpha"}}
        recs.append(rec)
        for i, v in enumerate(rep.eigenvalues, 1):
            rows.append({"g6": rec["g6"], "index": i, "eigenvalue": repr(v)})
        body = ", ".join(f"{v:.10g}" + (f" (x{k})" if k > 1 else "") for v, k in rep.clusters)
        lines.append(f"{rec['g6']}  alpha={alpha}  lambda_1={rep.eigenvalues[0]:.10g}  spectrum: {body}")
    _emit(args, _single_or_list(recs), rows=rows, text="\n".join(lines) + "\n")
    return EXIT_OK


def cmd_coronal(args):
    mode = _mode(args)
    recs, lines = [], []
    for g in _graphs_from(args):
        c = coronal_in_mode(g, mode, args.max_n)
        rec = {"g6": to_graph6(g), "mode": mode.kind, "coronal": c.render(),
               "numerator": c.num.render(), "denominator": c.den.render()}
        if not mode.symbolic:
            rec["alpha"] = str(mode.alpha)
        recs.append(rec)
        lines.append(c.render())
    _emit(args, _single_or_list(recs), text="\n".join(lines) + "\n")
    return EXIT_OK


def cmd_invariants(args):
    alpha = parse_alpha(args.alpha)
    recs, lines = [], []
    for g in _graphs_from(args):
        p = charpoly_at(g, alpha)
        inv = invariants_from_charpoly(p, alpha)
        rec = {"g6": to_graph6(g), "alpha": str(alpha), **inv.to_json()}
        if alpha < 1:
            rec["regular_from_spectrum"] = regularity_from_spectrum(p, alpha)
        recs.append(rec)
        lines.append(" ".join(f"{k}={v}" for k, v in rec.items()))
    _emit(args, _single_or_list(recs), text="\n".join(lines) + "\n")
    return EXIT_OK


def cmd_join(args):
    graphs = _graphs_from(args)
    if len(graphs) != 2:
        raise UsageError("join needs exactly two graphs")
    g1, g2 = graphs
    mode = _mode(args)
    p = join_charpoly(g1, g2, args.max_n)
    shown = p if mode.symbolic else p.eval_alpha(mode.alpha)
    joined = join(g1, g2)
    rec = {"left_g6": to_graph6(g1), "right_g6": to_graph6(g2), "join_g6": to_graph6(joined),
           "mode": mode.kind, "charpoly": shown.render()}
    if not mode.symbolic:
        rec["alpha"] = str(mode.alpha)
    status = EXIT_OK
    text = shown.render() + "\n"
    if args.check:
        direct = charpoly_exact(joined, args.max_n)
        ok = direct == p
        rec["check"] = "pass" if ok else "fail"
        text += f"check: {rec['check']}\n"
        if not ok:
            rec["determinant"] = direct.render()
            status = EXIT_FAIL
    _emit(args, rec, text=text)
    return status


def cmd_forge(args):
    if not args.graph or len(args.graph) != 1:
        raise UsageError("forge needs exactly one -g for the common factor")
    g = _one_graph(args.graph[0], "-g")
    h1, h2 = _one_graph(args.h1, "--h1"), _one_graph(args.h2, "--h2")
    g_right = _one_graph(args.g_right, "--g-right") if args.g_right else None
    mode = _mode(args)
    try:
        cert = forge_cospectral_pair(g, h1, h2, mode, g_right=g_right, max_order=args.max_n)
    except PreconditionError as exc:
        rec = {"status": "rejected", "reason": str(exc), "details": exc.details}
        _emit(args, rec, text=f"rejected: {exc}\n" + "".join(f"  {k}: {v}\n" for k, v in sorted(exc.details.items())))
        return EXIT_FAIL
    rec = cert.to_json()
    ok = verify_certificate(cert, max_order=args.max_n)
    rec["verified"] = ok
    text = (f"{rec['left_g6']} ~ {rec['right_g6']} ({mode})\ncharpoly: {rec['charpoly']}\n"
            f"verified: {ok}\n")
    _emit(args, rec, text=text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_scan(args):
    from .scan.classes import cospectral_classes
    from .scan.enumerate import enumerate_graphs

    mode = _mode(args)
    if args.input:
        graphs = _graphs_from(args)
    else:
        if not 1 <= args.min_n <= args.max_n <= 10:
            raise UsageError("scan enumerates 1 <= --min-n <= --max-n <= 10")
        graphs = [g for n in range(args.min_n, args.max_n + 1) for g in enumerate_graphs(n, jobs=args.jobs)]
    classes = cospectral_classes(graphs, mode, jobs=args.jobs, singletons=args.all)
    recs = [c.to_json() for c in classes]
    if args.format == "json":
        out = "".join(json.dumps(r, sort_keys=True) + "\n" for r in recs)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
        return EXIT_OK
    rows = [{"fingerprint": r["fingerprint"], "size": len(r["members"]),
             "members": " ".join(r["members"]), "charpoly": r["charpoly"]} for r in recs]
    text = "".join(f"{r['fingerprint']}  [{r['size']}]  {r['members']}\n" for r in rows)
    text += f"{len(recs)} classes ({mode})\n"
    _emit(args, recs, rows=rows, text=text)
    return EXIT_OK


def _run_suite(args):
    from .scan import verify as V

    alphas = parse_alpha_list(args.alpha)
    lo = args.min_n
    hi = args.max_n
    suite = args.suite
    if suite == "ds":
        if not args.family:
            raise UsageError("--suite ds needs --family")
        if args.family not in V.DS_FAMILIES:
            raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(V.DS_FAMILIES)}")
        if hi > 10:
            raise UsageError("--max-n is at most 10 for ds")
        return [V.verify_ds(args.family, range(lo or 1, (hi or 8) + 1), alphas,
                            mode=args.mode or "fixed", jobs=args.jobs)]
    if suite in ("le3.1", "le3.2", "lem2.1"):
        nr = range(lo, hi + 1) if lo and hi else None
        return [V.verify_lemma(suite, nr, alphas, tol=args.tol, exact=args.exact)]
    if suite == "thm3.1":
        nr = range(lo or 3, (hi or 8) + 1)
        a = alphas or list(V.INTERIOR_HALF_1)
        return [V.verify_lemma("claim1", nr, a, tol=args.tol, exact=args.exact),
                V.verify_lemma("claim2", nr, a, tol=args.tol, exact=args.exact),
                V.verify_ds("km_path", range(2, (hi or 8) + 1), a, jobs=args.jobs)]
    if suite == "transfer":
        return [V.verify_regular_ds_transfer(range(lo or 1, (hi or 7) + 1), alphas,
                                             max_total=args.max_total, control_max_n=args.control_max_n,
                                             jobs=args.jobs)]
    if suite == "corollary-regression":
        return [V.verify_corollary_regression(hi or 6)]
    raise UsageError(f"unknown suite {suite}")


def cmd_verify(args):
    reports = _run_suite(args)
    recs = [r.to_json(include_timing=args.timing) for r in reports]
    ok = all(r.passed for r in reports)
    lines = []
    for r in reports:
        lines.append(f"{r.suite}: {r.status.upper()} ({r.checked} checks)"
                     + (f" in {r.timing:.2f}s" if args.timing else ""))
        for c in r.counterexamples:
            lines.append("  counterexample: " + json.dumps(c, sort_keys=True))
        for note in r.notes:
            lines.append("  note: " + note)
    rows = [{"suite": r["suite"], "status": r["status"], "checked": r["checked"],
             "counterexamples": r["counterexamples"]} for r in recs]
    _emit(args, _single_or_list(recs), rows=rows, text="\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


# ------------------------------------------------------------------ parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    graphs = argparse.ArgumentParser(add_help=False)
    graphs.add_argument("-g", "--graph", action="append", help="graph6 string (repeatable)")
    graphs.add_argument("--input", action="append", help="graph6 file, one graph per line (repeatable)")

    alpha_mode = argparse.ArgumentParser(add_help=False)
    alpha_mode.add_argument("--alpha", help="rational p/q (preferred) or decimal")
    alpha_mode.add_argument("--mode", choices=("symbolic", "fixed"))

    ap = _Parser(prog="alphaspec", description="A_alpha spectra of small graphs: exact charpolys, "
                                               "joins, cospectral scans and verification suites.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("charpoly", parents=[common, graphs, alpha_mode], help="exact characteristic polynomial")
    p.add_argument("--max-n", type=int, default=16, help="largest order for exact work")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("spectrum", parents=[common, graphs], help="numerical eigenvalues at one alpha")
    p.add_argument("--alpha", required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("coronal", parents=[common, graphs, alpha_mode], help="coronal rational function")
    p.add_argument("--max-n", type=int, default=16)
    p.set_defaults(func=cmd_coronal)

    p = sub.add_parser("invariants", parents=[common, graphs], help="invariants read off the spectrum")
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("join", parents=[common, graphs, alpha_mode], help="charpoly of a join from its factors")
    p.add_argument("--check", action="store_true", help="compare with the direct determinant")
    p.add_argument("--max-n", type=int, default=16)
    p.set_defaults(func=cmd_join)

    p = sub.add_parser("forge", parents=[common, alpha_mode], help="cospectral pair g v h1, g v h2")
    p.add_argument("-g", "--graph", action="append", help="common factor g (graph6)")
    p.add_argument("--h1", required=True)
    p.add_argument("--h2", required=True)
    p.add_argument("--g-right", help="second common factor (both factors vary)")
    p.add_argument("--max-n", type=int, default=16)
    p.set_defaults(func=cmd_forge)

    p = sub.add_parser("scan", parents=[common, graphs, alpha_mode], help="cospectral classes")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--all", action="store_true", help="also emit singleton classes")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", parents=[common], help="theorem-verification suites")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--family", help="family for --suite ds")
    p.add_argument("--alpha", action="append", help="alpha sample(s), comma-separated or repeated")
    p.add_argument("--mode", choices=("symbolic", "fixed"))
    p.add_argument("--min-n", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--exact", action="store_true",
                   help="accept sub-tolerance margins when exact root isolation confirms them")
    p.add_argument("--max-total", type=int, default=8, help="largest join order (transfer suite)")
    p.add_argument("--control-max-n", type=int, default=10,
                   help="search bound for the regular cospectral pair (transfer suite)")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing in output")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        ap.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"alphaspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SizeBoundError, ValueError) as exc:
        print(f"alphaspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"alphaspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
