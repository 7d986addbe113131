"""Command-line interface: ``pairwalk <command> [--model A|L|Q] [--tol X] [--seed N] [--out FILE]``.

Graphs are given as a JSON file, an inline token (``Kn``, ``Pn``, ``Cn``,
``Km,n``, ``En`` for the empty graph) or a parenthesized construction such as
``"(seqjoin C4 K1 K1)"``. Exit codes: 0 positive verdict, 1 negative verdict,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import ast
import json
import math
import operator
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import constructions as cons
from .graph_core import Model, RealPureState, WeightedGraph, cluster_of, load_graph, pair_state, s_pair_state, vertex_state
from .spectral import decompose, fidelity_curve
from .transfer import DEFAULT_WINDOW, PGST_EVIDENCE_THRESHOLD, find_pst, has_pst, pgst_evidence
from .verify import SUITES, run_suite

DECIMALS = 9


class UsageError(Exception):
    """Bad command-line input; reported with exit code 2."""


# -- number formatting and parsing -------------------------------------------


def fmt(value: float) -> str:
    """Fixed 9-decimal output; integers print bare and ``-0`` never appears."""
    rounded = round(float(value), DECIMALS)
    if rounded == 0:
        rounded = 0.0
    if rounded == int(rounded):
        return str(int(rounded))
    return f"{rounded:.{DECIMALS}f}".rstrip("0")


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}


def parse_real(text: str) -> float:
    """A float or an arithmetic expression in ``pi``, e.g. ``3*pi/4``."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.UAdd, ast.USub)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        raise UsageError(f"cannot parse number {text!r}")

    try:
        return ev(ast.parse(text.strip(), mode="eval"))
    except (SyntaxError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse number {text!r}") from exc


def _ints(text: str, count: Optional[int] = None) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc
    if count is not None and len(values) != count:
        raise UsageError(f"expected {count} integers, got {text!r}")
    return values


# -- graphs -------------------------------------------------------------------

_TOKEN = re.compile(r"^(?:(K)(\d+),(\d+)|([KPCE])(\d+))$")


def named_graph(token: str) -> Optional[WeightedGraph]:
    m = _TOKEN.match(token)
    if m is None:
        return None
    if m.group(1):
        return cons.complete_bipartite(int(m.group(2)), int(m.group(3)))
    kind, n = m.group(4), int(m.group(5))
    return {"K": cons.complete_graph, "P": cons.path_graph, "C": cons.cycle_graph, "E": cons.empty_graph}[kind](n)


def _tokenize(text: str) -> list[str]:
    return re.findall(r"\(|\)|[^\s()]+", text)


def _read_expr(tokens: list[str], pos: int):
    """Parse one atom or parenthesized list starting at ``pos``."""
    if pos >= len(tokens):
        raise UsageError("unexpected end of graph expression")
    if tokens[pos] == "(":
        items, pos = [], pos + 1
        while pos < len(tokens) and tokens[pos] != ")":
            item, pos = _read_expr(tokens, pos)
            items.append(item)
        if pos >= len(tokens):
            raise UsageError("unbalanced parentheses in graph expression")
        return items, pos + 1
    if tokens[pos] == ")":
        raise UsageError("unbalanced parentheses in graph expression")
    return tokens[pos], pos + 1


def _graph_from_expr(expr) -> WeightedGraph:
    if isinstance(expr, list):
        if not expr or not isinstance(expr[0], str):
            raise UsageError("a construction needs a kind")
        return construct(expr[0], expr[1:])
    g = named_graph(expr)
    if g is not None:
        return g
    path = Path(expr)
    if not path.exists():
        raise UsageError(f"unknown graph {expr!r} (not a token and no such file)")
    try:
        return load_graph(path)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read graph file {expr}: {exc}") from exc


def parse_graph(text: str) -> WeightedGraph:
    tokens = _tokenize(text)
    expr, pos = _read_expr(tokens, 0)
    if pos != len(tokens):
        raise UsageError(f"trailing input in graph expression {text!r}")
    return _graph_from_expr(expr)


def _need(args: list, count: int, kind: str, usage: str) -> None:
    if len(args) != count:
        raise UsageError(f"{kind} expects {usage}")


def construct(kind: str, args: Sequence) -> WeightedGraph:
    """Build a graph from a construction kind and its (string or nested) arguments."""
    args = list(args)
    graph = _graph_from_expr
    try:
        if kind == "attach":
            _need(args, 3, kind, "BASE VERTICES INNER, e.g. attach P4 0,2 K2")
            base, inner = graph(args[0]), graph(args[2])
            plan = cons.AttachmentPlan(base, cluster_of(base, _ints(args[1])), inner)
            return cons.attach(plan)
        if kind == "complement":
            _need(args, 1, kind, "GRAPH")
            return cons.complement(graph(args[0]))
        if kind == "seqjoin":
            if len(args) < 2:
                raise UsageError("seqjoin expects at least two graphs")
            return cons.sequential_join([graph(a) for a in args])
        if kind == "cartesian":
            _need(args, 2, kind, "G H")
            return cons.cartesian(graph(args[0]), graph(args[1]))
        if kind in ("vcorona", "ecorona", "ncorona"):
            _need(args, 2, kind, "G H")
            fn = {"vcorona": cons.vertex_corona, "ecorona": cons.edge_corona, "ncorona": cons.neighborhood_corona}[kind]
            return fn(graph(args[0]), graph(args[1]))
        if kind == "blowup":
            if len(args) < 2:
                raise UsageError("blowup expects G C INNER_1 ... INNER_n (use - for no inner graph)")
            g = graph(args[0])
            c = int(args[1])
            inner = [None if a == "-" else graph(a) for a in args[2:]]
            if not inner:
                inner = [None] * g.n
            return cons.blow_up(g, c, inner)
        if kind == "kn-minus-matching":
            _need(args, 2, kind, "N M")
            return cons.complete_minus_matching(int(args[0]), int(args[1]))
        if kind == "kn-minus-cycle":
            _need(args, 2, kind, "N K (removes a cycle of length 2^K)")
            return cons.complete_minus_cycle(int(args[0]), int(args[1]))
    except (ValueError, TypeError, IndexError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"{kind}: {exc}") from exc
    raise UsageError(f"unknown construction {kind!r}")


# -- states -------------------------------------------------------------------


def parse_state(text: str, n: int) -> RealPureState:
    """``pair:a,b``, ``spair:a,b,s``, ``vertex:a`` or an explicit comma-separated vector."""
    kind, _, rest = text.partition(":")
    try:
        if kind == "pair":
            a, b = _ints(rest, 2)
            return pair_state(n, a, b)
        if kind == "spair":
            parts = rest.split(",")
            if len(parts) != 3:
                raise UsageError(f"spair expects a,b,s, got {rest!r}")
            return s_pair_state(n, int(parts[0]), int(parts[1]), parse_real(parts[2]))
        if kind == "vertex":
            (a,) = _ints(rest, 1)
            return vertex_state(n, a)
        values = [parse_real(v) for v in text.strip("[]").split(",")]
        if len(values) != n:
            raise UsageError(f"state has {len(values)} entries, graph has {n} vertices")
        return RealPureState.from_vector(values)
    except (ValueError, IndexError) as exc:
        raise UsageError(f"bad state {text!r}: {exc}") from exc


# -- output -------------------------------------------------------------------


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def format_spectrum(table) -> str:
    return ", ".join(f"{fmt(lam)} ({mult})" for lam, mult in table)


def _rounded(obj):
    if isinstance(obj, float):
        r = round(obj, DECIMALS)
        return 0.0 if r == 0 else r
    if isinstance(obj, dict):
        return {k: _rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v) for v in obj]
    return obj


# -- commands -----------------------------------------------------------------


def cmd_spectrum(args) -> int:
    g = parse_graph(args.graph)
    dec = decompose(g, args.model, args.tol)
    _emit(format_spectrum(dec.spectrum_table()), args.out)
    return 0


def cmd_fidelity(args) -> int:
    g = parse_graph(args.graph)
    x, y = parse_state(args.x, g.n), parse_state(args.y, g.n)
    t_max = parse_real(args.t_max)
    if args.steps < 1 and t_max != 0:
        raise UsageError("--steps must be positive")
    times = np.array([0.0]) if t_max == 0 else np.linspace(0.0, t_max, args.steps + 1)
    values = fidelity_curve(decompose(g, args.model, args.tol), times, x, y)
    lines = ["t,fidelity"] + [f"{t:.{DECIMALS}f},{v:.{DECIMALS}f}" for t, v in zip(times, values)]
    _emit("\n".join(lines), args.out)
    return 0


def cmd_pst(args) -> int:
    g = parse_graph(args.graph)
    x, y = parse_state(args.x, g.n), parse_state(args.y, g.n)
    certs = find_pst(decompose(g, args.model, args.tol), x, y, parse_real(args.window))
    report = {
        "model": args.model.tag,
        "x": args.x,
        "y": args.y,
        "window": parse_real(args.window),
        "pst": has_pst(certs),
        "certificates": [c.to_dict() for c in certs],
    }
    _emit(json.dumps(_rounded(report), indent=2), args.out)
    return 0 if report["pst"] else 1


def cmd_pgst(args) -> int:
    g = parse_graph(args.graph)
    x, y = parse_state(args.x, g.n), parse_state(args.y, g.n)
    ev = pgst_evidence(decompose(g, args.model, args.tol), x, y, parse_real(args.t_max), args.samples, args.seed)
    report = {"model": args.model.tag, "x": args.x, "y": args.y, **ev.to_dict()}
    _emit(json.dumps(_rounded(report), indent=2), args.out)
    return 0 if ev.sup_fidelity > PGST_EVIDENCE_THRESHOLD else 1


def cmd_construct(args) -> int:
    tokens = [t for part in args.params for t in _tokenize(part)]
    items, pos = [], 0
    while pos < len(tokens):
        item, pos = _read_expr(tokens, pos)
        items.append(item)
    g = construct(args.kind, items)
    _emit(g.to_json(), args.out)
    return 0


def cmd_verify(args) -> int:
    try:
        reports = run_suite(args.suite, seed=args.seed)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    text = "\n".join(r.render() for r in reports)
    total_fail = sum(r.failed for r in reports)
    total = sum(len(r.cases) for r in reports)
    text += f"\ntotal: {total - total_fail} passed, {total_fail} failed"
    _emit(text, args.out)
    return 0 if total_fail == 0 else 1


CONSTRUCT_KINDS = (
    "attach", "complement", "seqjoin", "cartesian", "vcorona", "ecorona", "ncorona",
    "blowup", "kn-minus-matching", "kn-minus-cycle",
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", type=Model.parse, default=Model.A, help="A, L or Q (default A)")
    common.add_argument("--tol", type=float, default=1e-8, help="eigenvalue grouping tolerance (default 1e-8)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="pairwalk", description="Quantum walk state transfer toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="distinct eigenvalues with multiplicities")
    p.add_argument("graph")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("fidelity", parents=[common], help="CSV of |y^T U(t) x| on a uniform grid")
    p.add_argument("graph")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--t-max", default="pi")
    p.add_argument("--steps", type=int, default=100)
    p.set_defaults(func=cmd_fidelity)

    p = sub.add_parser("pst", parents=[common], help="search for perfect state transfer")
    p.add_argument("graph")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--window", default=str(DEFAULT_WINDOW))
    p.set_defaults(func=cmd_pst)

    p = sub.add_parser("pgst", parents=[common], help="sampled evidence for pretty good state transfer")
    p.add_argument("graph")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--t-max", default="1e4")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.set_defaults(func=cmd_pgst)

    p = sub.add_parser("construct", parents=[common], help="build a graph and print its JSON")
    p.add_argument("kind", choices=CONSTRUCT_KINDS)
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="replay a verification suite")
    p.add_argument("suite", help=", ".join(list(SUITES) + ["all"]))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"pairwalk: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"pairwalk: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
