"""Command-line front end: ``qstr {label,strength,exact,bounds,verify}``.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 solver
stopped without an optimality certificate.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

import numpy as np

from . import bounds, labeling, solver, strength, verify
from .bits import BitString

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_TIMEOUT = 0, 1, 2, 3
FORMATS = ("markdown", "csv", "json")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def dump_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def markdown_table(header: Sequence[str], rows: Sequence[Sequence], rules_before: set[int] = frozenset()) -> str:
    """Pipe table; a dashed row is inserted before each row index in ``rules_before``."""
    cells = [list(map(str, header))] + [[("" if c is None else str(c)) for c in r] for r in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(header))]

    def line(r):
        return "| " + " | ".join(c.ljust(w) for c, w in zip(r, widths)) + " |"

    rule = "|" + "|".join("-" * (w + 2) for w in widths) + "|"
    out = [line(cells[0]), rule]
    for k, r in enumerate(cells[1:]):
        if k in rules_before:
            out.append(rule)
        out.append(line(r))
    return "\n".join(out) + "\n"


def csv_table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(["" if c is None else c for c in r])
    return buf.getvalue()


def render(fmt: str, header: Sequence[str], rows: Sequence[Sequence], payload, rules_before=frozenset()) -> str:
    if fmt == "json":
        return dump_json(payload)
    if fmt == "csv":
        return csv_table(header, rows)
    return markdown_table(header, rows, rules_before)


# --- label ---------------------------------------------------------------

def label_table(n: int) -> tuple[list[tuple[str, int]], set[int]]:
    if n > labeling.MAX_SEQUENCE_N:
        raise UsageError(f"--table is limited to n <= {labeling.MAX_SEQUENCE_N}")
    labels = labeling.labels_of_array(n, np.arange(1 << n, dtype=np.uint64))
    by_label = np.empty(1 << n, dtype=np.int64)
    by_label[labels - 1] = np.arange(1 << n)
    rows = [(format(int(v), f"0{n}b"), p + 1) for p, v in enumerate(by_label)]
    rules, pos = set(), 0
    for i, _ in labeling.sequence_classes(n):
        if pos:
            rules.add(pos)
        pos += labeling.TABLE(n, i)
    return rows, rules


def cmd_label(args) -> str:
    n = args.n
    if n < 1:
        raise UsageError("--n must be >= 1")
    header = ("bitstring", "label")
    if args.table:
        rows, rules = label_table(n)
        payload = {"n": n, "rows": [[x, str(v)] for x, v in rows]}
        return render(args.format, header, rows, payload, rules)
    if args.string is not None:
        try:
            x = BitString.parse(args.string)
            v = labeling.label_of(n, x)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        row = (str(x), v)
    else:
        try:
            x = labeling.string_of(n, args.value)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        row = (str(x), args.value)
    payload = {"n": n, "bitstring": row[0], "label": str(row[1])}
    return render(args.format, header, [row], payload)


# --- strength ------------------------------------------------------------

def cmd_strength(args) -> str:
    n = args.n
    if args.method == "edges":
        if not 1 <= n <= strength.MAX_EDGE_N:
            raise UsageError(f"edge scan supports 1 <= n <= {strength.MAX_EDGE_N}; try --method scan")
        res = strength.strf_hypercube_edges(n)
    else:
        if not 1 <= n <= strength.MAX_SCAN_N:
            raise UsageError(f"pair scan supports 1 <= n <= {strength.MAX_SCAN_N}")
        res = strength.strf_hypercube_scan(n)
    payload = res.to_json()
    header = ("n", "value", "witness_odd", "witness_even", "method", "elapsed_ms")
    row = (n, res.value, res.witness[0], res.witness[1], res.method, payload["elapsed_ms"])
    return render(args.format, header, [row], payload)


# --- exact ---------------------------------------------------------------

def load_seed(path: str, g: strength.Graph) -> tuple[int, ...]:
    with open(path) as fh:
        data = json.load(fh)
    pairs = data["labeling"] if isinstance(data, dict) else data
    index = {g.vertex_name(u): u for u in range(g.vertex_count)}
    labels = [0] * g.vertex_count
    for vertex, lab in pairs:
        u = index.get(str(vertex))
        if u is None:
            raise UsageError(f"seed labeling names unknown vertex {vertex!r}")
        labels[u] = int(lab)
    if sorted(labels) != list(range(1, g.vertex_count + 1)):
        raise UsageError("seed labeling is not a bijection onto 1..N")
    return tuple(labels)


def cmd_exact(args) -> tuple[str, int]:
    try:
        g = solver.build_graph(args.graph, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    seed = load_seed(args.seed_labeling, g) if args.seed_labeling else None
    try:
        budget = solver.SolveBudget(args.time_limit, args.node_limit)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = solver.min_strength(g, budget, seed)
    payload = out.to_json(g)
    if args.format == "markdown":
        text = markdown_table(
            ("graph", "status", "best_value", "nodes_explored", "elapsed_ms"),
            [(g.name, out.status, out.best_value, out.nodes_explored, payload["elapsed_ms"])],
        )
        text += "\n" + markdown_table(("vertex", "label"), payload["labeling"])
    else:
        header = ("vertex", "label")
        text = render(args.format, header, payload["labeling"], payload)
    return text, EXIT_OK if out.status == "optimal" else EXIT_TIMEOUT


# --- bounds --------------------------------------------------------------

BOUNDS_HEADER = ("n", "lower", "upper_prior", "upper_recurrence", "upper_closed")


def cmd_bounds(args) -> str:
    try:
        rows = bounds.comparison_table(args.n_min, args.n_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        return dump_json({"rows": [{k: (None if v is None else str(v)) for k, v in r.as_dict().items()} for r in rows]})
    if args.format == "csv":
        return csv_table(BOUNDS_HEADER, [tuple(r.as_dict().values()) for r in rows])
    header = ("n", "upper_prior", "upper_recurrence", "lower", "upper_closed")
    return markdown_table(header, [(r.n, r.upper_prior, r.upper_recurrence, r.lower, r.upper_closed) for r in rows])


# --- verify --------------------------------------------------------------

def cmd_verify(args) -> tuple[str, int]:
    results = verify.run_suites(args.suite, args.n_max)
    ok = all(c.passed for c in results)
    header = ("suite", "check", "result", "detail")
    rows = [(c.suite, c.name, "pass" if c.passed else "FAIL", c.detail) for c in results]
    payload = {
        "passed": ok,
        "n_max": args.n_max,
        "checks": [{"suite": c.suite, "check": c.name, "passed": c.passed, "detail": c.detail} for c in results],
    }
    return render(args.format, header, rows, payload), EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qstr", description="Hypercube labeling strength toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=FORMATS, default="markdown")

    sp = sub.add_parser("label", help="evaluate the canonical labeling or print its table")
    sp.add_argument("--n", type=int, required=True)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--string")
    g.add_argument("--value", type=int)
    g.add_argument("--table", action="store_true")
    fmt(sp)

    sp = sub.add_parser("strength", help="strength of the canonical labeling of Q_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--method", choices=("edges", "scan"), default="scan")
    fmt(sp)

    sp = sub.add_parser("exact", help="certified minimum strength of a small graph")
    sp.add_argument("--graph", choices=("hypercube", "path", "cycle"), default="hypercube")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--time-limit", type=float, default=60.0)
    sp.add_argument("--node-limit", type=int, default=None)
    sp.add_argument("--seed-labeling", help="JSON labeling used as the starting incumbent")
    fmt(sp)

    sp = sub.add_parser("bounds", help="lower and upper bounds table")
    sp.add_argument("--n-min", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    fmt(sp)

    sp = sub.add_parser("verify", help="run invariant suites")
    sp.add_argument("--suite", action="append", choices=tuple(verify.SUITES) + ("all",), default=None)
    sp.add_argument("--n-max", type=int, default=12)
    fmt(sp)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "label":
            text = cmd_label(args)
        elif args.command == "strength":
            text = cmd_strength(args)
        elif args.command == "exact":
            text, code = cmd_exact(args)
        elif args.command == "bounds":
            text = cmd_bounds(args)
        else:
            args.suite = args.suite or ["all"]
            text, code = cmd_verify(args)
    except UsageError as exc:
        print(f"qstr {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
