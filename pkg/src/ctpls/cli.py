"""Command-line front end.

Subcommands: solve, exact, generate, color, yes-op, reduce, extract-is,
bench.  Graph arguments name a directory written by `generate`/`yes-op`
(edges.txt + colors.txt) or a bare edge-list file; in the latter case a
<colors> argument supplies the coloring, either as a color-file path or
as an integer count to color randomly (with --seed).  Exit code 0 on
success, 1 with a diagnostic on stderr otherwise.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional, Sequence

from . import io as gio
from .bench import parse_bench_config, run_bench, write_stats_csv
from .exact import ExactLimits, exact_max_colorful_path
from .generate import (
    SynthConfig,
    assign_random_colors,
    gen_synthetic,
    parse_topology,
    yes_op_transform,
)
from .graph import ColoredTemporalGraph, InputError, LimitError
from .heuristic import ctpls
from .reduction import StaticGraph, build_instance, path_to_is

SOURCE_NAME = "source.txt"


def _load_colored(graph_arg: str, colors_arg: Optional[str], seed: int) -> ColoredTemporalGraph:
    """Graph directory, or edge-list file + (color file | color count)."""
    if os.path.isdir(graph_arg):
        return gio.load_graph(graph_arg)
    parsed = gio.parse_edge_list(graph_arg)
    skeleton = ColoredTemporalGraph(
        {v: 0 for v in parsed.vertices}, parsed.edges, parsed.domain)
    if colors_arg is None:
        raise InputError(
            f"{graph_arg} is a bare edge list; pass <colors> "
            "(a color file or an integer count)")
    try:
        k = int(colors_arg)
    except ValueError:
        colors = gio.read_color_file(colors_arg)
        missing = set(parsed.vertices) - set(colors)
        if missing:
            raise InputError(
                f"color file misses {len(missing)} vertices, "
                f"e.g. {min(missing)}")
        return ColoredTemporalGraph(colors, parsed.edges, parsed.domain)
    return assign_random_colors(skeleton, k, seed)


def _print_path(path, out_path: Optional[str]) -> None:
    print("path-vertices:", " ".join(map(str, path.vertices)))
    print("path-times:", " ".join(map(str, path.times)))
    if out_path:
        gio.write_path_file(path, out_path)


def _cmd_solve(args: argparse.Namespace) -> int:
    graph = _load_colored(args.graph, args.colors, args.seed)
    path, trace = ctpls(graph)
    _print_path(path, args.out_path)
    print(f"colors: {path.length} of {graph.n_colors}")
    if trace.greedy_fallback:
        print("note: no usable seed edge; single-vertex fallback")
    print(
        f"greedy: {trace.greedy_length}  ls1-moves: {trace.ls1_moves}  "
        f"ls2-moves: {trace.ls2_moves}  rounds: {trace.rounds}")
    print(f"seconds: {trace.elapsed_s:.3f}")
    return 0


def _cmd_exact(args: argparse.Namespace) -> int:
    graph = _load_colored(args.graph, args.colors, args.seed)
    limits = ExactLimits(
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        time_budget_s=args.budget,
    )
    result = exact_max_colorful_path(graph, limits)
    _print_path(result.path, args.out_path)
    print(f"colors: {result.path.length} of {graph.n_colors}")
    print(f"proven: {'yes' if result.proven else 'no'}")
    if result.note:
        print(f"note: {result.note}")
    print(f"seconds: {result.elapsed_s:.3f}")
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    cfg = SynthConfig(
        n_vertices=args.n,
        horizon=args.horizon,
        topology=parse_topology(args.topology),
        n_colors=args.colors,
        seed=args.seed,
    )
    graph, record = gen_synthetic(cfg)
    gio.save_graph(graph, args.out)
    gio.write_path_file(record.path, os.path.join(args.out, "planted.txt"))
    print(f"wrote {args.out}: {graph.n_vertices} vertices, "
          f"{graph.n_edges} edges, {graph.n_colors} colors")
    return 0


def _cmd_color(args: argparse.Namespace) -> int:
    parsed = gio.parse_edge_list(args.graph)
    skeleton = ColoredTemporalGraph(
        {v: 0 for v in parsed.vertices}, parsed.edges, parsed.domain)
    colored = assign_random_colors(skeleton, args.colors, args.seed)
    gio.write_color_file(dict(colored.colors), args.out)
    print(f"wrote {args.out}: {colored.n_vertices} vertices, "
          f"{colored.n_colors} distinct colors")
    return 0


def _cmd_yes_op(args: argparse.Namespace) -> int:
    graph = _load_colored(args.graph, args.colors, args.seed)
    universe = None
    if args.colors is not None:
        try:
            universe = set(range(int(args.colors)))
        except ValueError:
            pass  # color file: the observed palette is the universe
    out_graph, record = yes_op_transform(graph, args.seed, universe=universe)
    gio.save_graph(out_graph, args.out)
    gio.write_path_file(record.path, os.path.join(args.out, "planted.txt"))
    print(f"wrote {args.out}: planted {record.path.length}-color path")
    if record.recolored:
        print(f"recolored vertices to cover missing colors: "
              f"{' '.join(map(str, record.recolored))}")
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    with open(args.static_graph, "r", encoding="ascii") as fh:
        source = StaticGraph.from_text(fh.read())
    inst = build_instance(source)
    gio.save_graph(inst.graph, args.out)
    with open(os.path.join(args.out, SOURCE_NAME), "w", encoding="ascii") as fh:
        fh.write(source.to_text())
    print(f"wrote {args.out}: n={source.n} -> "
          f"{inst.graph.n_vertices} vertices, {inst.graph.n_edges} edges")
    return 0


def _cmd_extract_is(args: argparse.Namespace) -> int:
    src_file = os.path.join(args.reduced_dir, SOURCE_NAME)
    with open(src_file, "r", encoding="ascii") as fh:
        source = StaticGraph.from_text(fh.read())
    inst = build_instance(source)
    path = gio.read_path_file(args.path_file)
    members = path_to_is(inst, path)
    print("independent-set:", " ".join(map(str, sorted(members))))
    print(f"size: {len(members)}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    cfg = parse_bench_config(args.config)
    t0 = time.perf_counter()
    report = run_bench(cfg, workers=args.workers)
    write_stats_csv(report, args.out)
    for err in report.errors:
        print(f"error: {err}", file=sys.stderr)
    print(f"wrote {args.out}: {len(report.rows)} rows in "
          f"{time.perf_counter() - t0:.1f}s")
    return 1 if report.errors else 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="ctpls",
        description="Colorful temporal path toolkit",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def graph_colors_seed(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph", help="graph directory or edge-list file")
        p.add_argument(
            "colors", nargs="?", default=None,
            help="color file path, or an integer count for random coloring")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for random coloring (default 0)")
        p.add_argument("--out-path", default=None,
                       help="also write the result path to this file")

    p = sub.add_parser("solve", help="run the ctpls heuristic")
    graph_colors_seed(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("exact", help="run the exact solver")
    graph_colors_seed(p)
    p.add_argument("--max-vertices", type=int,
                   default=ExactLimits.max_vertices)
    p.add_argument("--max-edges", type=int, default=ExactLimits.max_edges)
    p.add_argument("--budget", type=float, default=ExactLimits.time_budget_s,
                   help="time budget in seconds")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("generate", help="generate a synthetic instance")
    p.add_argument("--topology", required=True, help="er:P or ba:M")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="output graph directory")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("color", help="random-color an edge list")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="output color file")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("yes-op", help="plant a full-palette colorful path")
    p.add_argument("graph", help="graph directory or edge-list file")
    p.add_argument(
        "colors", nargs="?", default=None,
        help="color file path, or an integer count for random coloring")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output graph directory")
    p.set_defaults(func=_cmd_yes_op)

    p = sub.add_parser("reduce",
                       help="build the hardness gadget from a static graph")
    p.add_argument("static_graph", help="'n m' header + 'i j' line file")
    p.add_argument("--out", required=True, help="output graph directory")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("extract-is",
                       help="recover an independent set from a gadget path")
    p.add_argument("reduced_dir", help="directory written by reduce")
    p.add_argument("path_file", help="path file (vertices line, times line)")
    p.set_defaults(func=_cmd_extract_is)

    p = sub.add_parser("bench", help="run a benchmark campaign")
    p.add_argument("config", help="flat key=value config file")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--workers", type=int, default=None,
                   help="parallel runs (default: CTPLS_WORKERS env var or 1)")
    p.set_defaults(func=_cmd_bench)

    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, LimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
