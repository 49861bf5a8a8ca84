"""Command line front end.

    qjstirling table qjs-second 4 --format latex
    qjstirling verify operators --family asc:a=-1 --k 3 --deg 6
    qjstirling enumerate js-partitions 3 2
    qjstirling family lqj:a=q,b=q^2 --n 4

Exit codes: 0 pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import combinat, qfamilies, qstirling
from .exactscalars import Laurent, render, to_json
from .suites import DEFAULT_FAMILIES, build_suite, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_ENUM_CAPS = {"js-partitions": 7, "perm-pairs": 6, "double-signed": 6, "pairs-zero": 6}


class UsageError(Exception):
    pass


def _emit(out, text: str):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _latex(s: str) -> str:
    s = re.sub(r"\^(-?\d+)", r"^{\1}", s)
    return s.replace("*", " ")


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def _triangle_for(tag: str):
    key = tag.replace("-", "_")
    if key not in qstirling.FAMILIES:
        names = ", ".join(sorted(k.replace("_", "-") for k in qstirling.FAMILIES))
        raise UsageError(f"unknown table {tag!r}; choose from {names}")
    return qstirling.FAMILIES[key]


def cmd_table(args, out) -> int:
    tri = _triangle_for(args.family)
    fmt = args.format_pos or args.format
    if args.n < 0 or args.n > tri.n_max:
        raise UsageError(f"n must be between 0 and {tri.n_max} for {args.family}")
    rows = [(n, k, tri(n, k)) for n in range(args.n + 1) for k in range(n + 1)]
    if fmt == "json":
        doc = {
            "table": args.family,
            "n_max": args.n,
            "rows": [{"n": n, "k": k, "value": render(v), "exact": to_json(v)} for n, k, v in rows],
        }
        _emit(out, json.dumps(doc, sort_keys=True))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "value"])
        for n, k, v in rows:
            w.writerow([n, k, render(v)])
        _emit(out, buf.getvalue())
    else:
        lines = [r"\begin{tabular}{rrl}", r"$n$ & $k$ & value \\ \hline"]
        lines += [f"{n} & {k} & ${_latex(render(v))}$ \\\\" for n, k, v in rows]
        lines.append(r"\end{tabular}")
        _emit(out, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args, out) -> int:
    families = tuple(args.family) if args.family else DEFAULT_FAMILIES
    for spec in families:
        try:
            qfamilies.parse_family(spec)
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad --family {spec!r}: {exc}") from None
    opts = {"n": args.n, "k": args.k, "deg": args.deg, "seed": args.seed, "families": families}
    checks = build_suite(args.suite, **opts)
    report = run_checks(args.suite, checks, jobs=args.jobs)
    _emit(out, json.dumps(report.to_json(timings=args.timings), sort_keys=True))
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------


def _stats_json(st: dict) -> dict:
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in st.items()}


def cmd_enumerate(args, out) -> int:
    obj, n, k, i = args.object, args.n, args.k, args.i
    cap = _ENUM_CAPS[obj]
    if n > cap:
        raise UsageError(f"refusing to enumerate {obj} with n={n}; cap is {cap}")
    if not 0 <= k <= n:
        raise UsageError("need 0 <= k <= n")
    if obj == "js-partitions":
        items = [(str(p), st) for p, st in combinat.enumerate_js_partitions(n, k, i)]
        weight = lambda st: ("q", st["inv"], st["i"])  # noqa: E731
    elif obj == "perm-pairs":
        items = [(f"({s}, {t})", st) for s, t, st in combinat.enumerate_perm_pairs(n, k, i)]
        weight = lambda st: ("q", st["sor"], st["rec0"])  # noqa: E731
    elif obj == "double-signed":
        items = [(str(p), st) for p, st in combinat.enumerate_double_signed(n, k)]
        weight = None
    else:
        items = [(f"({s}, {t})", st) for s, t, st in combinat.iter_pairs_zero(n, k)]
        weight = None
    for text, st in items:
        _emit(out, json.dumps({"object": text, "stats": _stats_json(st)}, sort_keys=True))
    summary = {"count": len(items)}
    if weight is not None:
        by_i: dict[int, dict[int, int]] = {}
        for _, st in items:
            _, e, idx = weight(st)
            by_i.setdefault(idx, {}).setdefault(e, 0)
            by_i[idx][e] += 1
        polys = {idx: Laurent("q", terms) for idx, terms in sorted(by_i.items())}
        summary["by_i"] = {str(idx): render(p) for idx, p in polys.items()}
        summary["polynomial"] = " | ".join(render(p) for p in polys.values())
    elif obj == "double-signed":
        summary["polynomial"] = render(combinat.double_signed_polynomial(n, k))
    else:
        summary["polynomial"] = render(combinat.pairs_zero_polynomial(n, k))
    _emit(out, json.dumps({"summary": summary}, sort_keys=True))
    return EXIT_OK


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------


def cmd_family(args, out) -> int:
    try:
        fam = qfamilies.parse_family(args.spec)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    rows = []
    for n in range(args.n + 1):
        rows.append(
            {
                "n": n,
                "beta": render(fam.beta(n)),
                "gamma": render(fam.gamma(n + 1)),
                "eigenvalue": render(qfamilies.eigenvalue(fam, n)),
                "P": str(fam.pn(n)),
            }
        )
    doc = {
        "family": fam.label(),
        "base": f"q=v^{fam.d}",
        "Phi": str(fam.phi),
        "Psi": str(fam.psi),
        "z": render(qfamilies.z_parameter(fam)),
        "rows": rows,
    }
    if args.format == "json":
        _emit(out, json.dumps(doc, sort_keys=True))
    else:
        lines = [
            f"% {doc['family']}, {doc['base']}",
            rf"\Phi(x) = {_latex(doc['Phi'])}, \quad \Psi(x) = {_latex(doc['Psi'])}, \quad z = {_latex(doc['z'])}",
            r"\begin{tabular}{rlll}",
            r"$n$ & $\beta_n$ & $\gamma_{n+1}$ & eigenvalue \\ \hline",
        ]
        lines += [f"{r['n']} & ${_latex(r['beta'])}$ & ${_latex(r['gamma'])}$ & ${_latex(r['eigenvalue'])}$ \\\\" for r in rows]
        lines.append(r"\end{tabular}")
        _emit(out, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qjstirling", description="Exact q-Jacobi-Stirling tables and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print a number triangle")
    p.add_argument("family", help="e.g. qjs-second, qstirling-first, central-U, wilson-second")
    p.add_argument("n", type=int)
    p.add_argument("format_pos", nargs="?", choices=["json", "csv", "latex"], metavar="format")
    p.add_argument("--format", choices=["json", "csv", "latex"], default="json")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["stirling", "combinatorics", "operators", "functionals", "all"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--deg", type=int)
    p.add_argument("--family", action="append", help="name:param=value,... (repeatable)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="include wall times (breaks byte-identical output)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="stream combinatorial objects as JSON lines")
    p.add_argument("object", choices=sorted(_ENUM_CAPS))
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("i", type=int, nargs="?")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("family", help="describe a q-classical family")
    p.add_argument("spec", help="asc:a=-1, dqh, sw, lqj:a=q,b=q^2")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--format", choices=["json", "latex"], default="json")
    p.set_defaults(func=cmd_family)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"qjstirling: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
