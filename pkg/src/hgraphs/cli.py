"""Command-line front end.

Exit codes: 0 success / answer yes; 1 answer no or UNSAT; 2 malformed or
inconsistent input; 3 a cap or search limit was exceeded.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from dataclasses import dataclass

from . import clique as cliquemod
from . import fpt
from .core import full_lists, max_clique_bruteforce
from .errors import (
    DomainMismatch,
    ExactLimitExceeded,
    HgraphsError,
    InvalidRepresentation,
    NotAnAtom,
    NotCactus,
    OracleLimitExceeded,
    ParseError,
    SearchLimitExceeded,
)
from .formats import (
    emit_gr,
    emit_rep,
    emit_td,
    load_instance,
)
from .pattern import find_tripartition, is_cactus
from .representation import generate_hard_instance, helly_check, verify_representation
from .core import complement as complement_graph
from .core import two_subdivision

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


@dataclass(frozen=True)
class StrategyChoice:
    name: str  # "cactus" | "helly" | "treewidth" | "brute"
    reason: str


def _available_pattern(instance):
    if instance.pattern is not None:
        return instance.pattern
    if instance.representation is not None:
        return instance.representation.pattern.base
    return None


def choose_strategy(mode: str, instance) -> StrategyChoice:
    """Dispatch rule: cactus, then helly, then treewidth, then brute."""
    if mode != "auto":
        return StrategyChoice(mode, "requested explicitly")
    if instance.representation is not None and is_cactus(
        instance.representation.pattern.base
    ):
        return StrategyChoice("cactus", "representation on a cactus pattern given")
    if _available_pattern(instance) is not None:
        return StrategyChoice("helly", "pattern given, trying the Helly clique bound")
    return StrategyChoice("treewidth", "no usable representation or pattern")


def _print_vertices(label: str, verts) -> None:
    print(f"{label}: " + " ".join(str(v + 1) for v in verts))


def cmd_clique(args) -> int:
    instance = load_instance(args.graph, args.pattern, args.rep)
    g = instance.graph
    choice = choose_strategy(args.mode, instance)
    print(f"strategy: {choice.name} ({choice.reason})")
    if choice.name == "cactus":
        if instance.representation is None:
            print("error: cactus mode needs --rep", file=sys.stderr)
            return EXIT_INPUT
        best = cliquemod.clique_cactus(g, instance.representation)
    elif choice.name == "helly":
        pattern = _available_pattern(instance)
        if pattern is None:
            print("error: helly mode needs --pattern or --rep", file=sys.stderr)
            return EXIT_INPUT
        result = cliquemod.clique_helly(g, pattern)
        if result.exceeded:
            print(
                f"not helly: more than {result.bound} maximal cliques "
                f"(no Helly representation on this pattern exists)"
            )
            return EXIT_LIMIT
        best = result.clique
    elif choice.name == "treewidth":
        attempt = fpt.tree_decomposition(
            g, max(g.n - 1, 0), approx_factor=args.approx_factor
        )
        best = fpt.max_clique_decomposed(g, attempt.decomposition)
    else:
        best = max_clique_bruteforce(g, limit=args.oracle_limit)
    _print_vertices("clique", best)
    print(f"size: {len(best)}")
    return EXIT_OK


def cmd_color(args) -> int:
    instance = load_instance(args.graph, lists_path=args.lists)
    g = instance.graph
    k = args.k
    lists = dict(full_lists(g.n, k))
    if instance.lists:
        lists.update(instance.lists)
    attempt = fpt.tree_decomposition(
        g, max(g.n - 1, 0), approx_factor=args.approx_factor
    )
    coloring = fpt.list_k_coloring(g, lists, k, attempt.decomposition)
    if coloring is None:
        print("UNSAT")
        return EXIT_NO
    print("coloring:")
    for v in range(g.n):
        print(f"{v + 1} {coloring[v]}")
    return EXIT_OK


def cmd_gen_hard(args) -> int:
    instance = load_instance(args.graph, args.pattern)
    part = find_tripartition(instance.pattern)
    if part is None:
        print("pattern admits no tripartition with doubled connections")
        return EXIT_NO
    target, rep = generate_hard_instance(instance.graph, instance.pattern, part)
    with open(args.out_graph, "w", encoding="utf-8") as fh:
        fh.write(emit_gr(target))
    ref = os.path.relpath(args.pattern, os.path.dirname(args.out_rep) or ".")
    with open(args.out_rep, "w", encoding="utf-8") as fh:
        fh.write(emit_rep(rep, ref))
    print(f"target: {target.n} vertices, {target.m} edges -> {args.out_graph}")
    print(f"representation -> {args.out_rep}")
    return EXIT_OK


def cmd_verify(args) -> int:
    instance = load_instance(args.graph, rep_path=args.rep)
    verdict = verify_representation(instance.graph, instance.representation)
    if verdict.is_ok:
        print("ok")
        return EXIT_OK
    if verdict.kind == "disconnected":
        print(f"disconnected: vertex {verdict.vertex + 1}")
    else:
        for u, v, expected in verdict.mismatches:
            want = "edge" if expected else "non-edge"
            got = "non-edge" if expected else "edge"
            print(f"mismatch: ({u + 1},{v + 1}) expected {want}, got {got}")
    return EXIT_NO


def cmd_helly(args) -> int:
    instance = load_instance(rep_path=args.rep)
    report = helly_check(instance.representation, args.cap)
    if report.kind == "helly":
        print("helly")
        return EXIT_OK
    if report.kind == "violation":
        _print_vertices("violation", report.witness)
        return EXIT_NO
    print(f"exceeded: more than {report.cap} maximal cliques")
    return EXIT_LIMIT


def cmd_atoms(args) -> int:
    instance = load_instance(args.graph)
    decomposition = cliquemod.clique_cutset_decomposition(instance.graph)
    print(f"atoms: {len(decomposition.atoms)}")
    for atom in decomposition.atoms:
        _print_vertices("atom", atom.vertices)
    return EXIT_OK


def cmd_td(args) -> int:
    instance = load_instance(args.graph)
    g = instance.graph
    target = args.target if args.target is not None else max(g.n - 1, 0)
    rng = random.Random(args.seed)
    attempt = fpt.tree_decomposition(
        g, target, approx_factor=args.approx_factor, rng=rng
    )
    if not attempt.found:
        print(
            f"width exceeded: {attempt.lower_bound_method} lower bound "
            f"{attempt.lower_bound} > target {target}"
        )
        return EXIT_NO
    d = attempt.decomposition
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(emit_td(d, g.n))
    note = " (over accepted factor)" if attempt.over_target else ""
    print(f"width: {d.width}{note} -> {args.out}")
    return EXIT_OK


def cmd_subdivide(args) -> int:
    instance = load_instance(args.graph)
    labeled = two_subdivision(instance.graph)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(emit_gr(labeled.result))
    for k, (u, v) in enumerate(labeled.edge_order):
        print(
            f"edge {u + 1}-{v + 1} -> path {u + 1} "
            f"{labeled.sub1(k) + 1} {labeled.sub2(k) + 1} {v + 1}"
        )
    return EXIT_OK


def cmd_complement(args) -> int:
    instance = load_instance(args.graph)
    result = complement_graph(instance.graph)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(emit_gr(result))
    print(f"complement: {result.n} vertices, {result.m} edges -> {args.out}")
    return EXIT_OK


GLOBAL_DEFAULTS = {"seed": 0, "cap": 1000, "oracle_limit": 20, "approx_factor": 5}


def _add_global_flags(p: argparse.ArgumentParser) -> None:
    # SUPPRESS keeps a subcommand-level absence from clobbering a value given
    # before the subcommand; unset flags get GLOBAL_DEFAULTS after parsing
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                   help="seed for heuristic tie-breaks")
    p.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                   help="maximal-clique emission cap")
    p.add_argument("--oracle-limit", type=int, default=argparse.SUPPRESS,
                   help="brute-force size limit")
    p.add_argument("--approx-factor", type=int, default=argparse.SUPPRESS,
                   help="accepted width factor over the target")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hgraphs",
        description="Clique and coloring algorithms on intersection graphs "
        "of subdivided patterns.",
    )
    _add_global_flags(parser)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("clique", help="maximum clique with strategy auto-selection")
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern")
    p.add_argument("--rep")
    p.add_argument(
        "--mode",
        choices=["auto", "cactus", "helly", "treewidth", "brute"],
        default="auto",
    )
    p.set_defaults(func=cmd_clique)

    p = subs.add_parser("color", help="list coloring via tree-decomposition DP")
    p.add_argument("--graph", required=True)
    p.add_argument("--lists", help="color lists file; unlisted vertices get 1..k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_color)

    p = subs.add_parser(
        "gen-hard",
        help="represent the complement of the graph's 2-subdivision on the pattern",
    )
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--out-graph", required=True)
    p.add_argument("--out-rep", required=True)
    p.set_defaults(func=cmd_gen_hard)

    p = subs.add_parser("verify", help="verify a representation against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--rep", required=True)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("helly", help="check the Helly property of a representation")
    p.add_argument("--rep", required=True)
    p.set_defaults(func=cmd_helly)

    p = subs.add_parser("atoms", help="clique-cutset decomposition into atoms")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_atoms)

    p = subs.add_parser("td", help="width-targeted tree decomposition")
    p.add_argument("--graph", required=True)
    p.add_argument("--target", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_td)

    p = subs.add_parser("subdivide", help="2-subdivision of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_subdivide)

    p = subs.add_parser("complement", help="complement of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_complement)

    for sub_parser in subs.choices.values():
        _add_global_flags(sub_parser)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"{exc.path}:{exc.line}: {exc.message}", file=sys.stderr)
        return EXIT_INPUT
    except (OracleLimitExceeded, SearchLimitExceeded, ExactLimitExceeded) as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (DomainMismatch, InvalidRepresentation, NotCactus, NotAnAtom) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HgraphsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
