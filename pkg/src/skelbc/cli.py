"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 data error (bad or missing files,
invalid graphs, partitions or target sets).
"""

from __future__ import annotations

import argparse
import contextlib
import sys
import time
from typing import TextIO

from . import generators
from ._pool import default_workers
from .all_pairs import brandes_pp_all
from .bench import run_bench, write_report
from .brandes import EPSILON, CentralityVector, brandes, check_targets
from .driver import MODES, PIN, brandes_pp, target_skeleton
from .graph import Graph, dump_edge_list, label_sort_key, load_edge_list, load_node_set
from .oracle import oracle_betweenness
from .partition import Partition, bfs_balanced_partition, dump_partition, load_partition

USAGE_ERROR = 1
DATA_ERROR = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


@contextlib.contextmanager
def _output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_edge_list(fh)


def _read_targets(path: str, graph: Graph) -> list[int]:
    with open(path, encoding="utf-8") as fh:
        targets = load_node_set(fh, graph)
    check_targets(graph.n, targets)
    return targets


def _read_partition(args, graph: Graph) -> Partition:
    if args.partition is not None:
        with open(args.partition, encoding="utf-8") as fh:
            return load_partition(fh, graph)
    if args.auto_partition is not None:
        return bfs_balanced_partition(graph, args.auto_partition, args.seed)
    raise UsageError("one of --partition or --auto-partition is required")


def write_centrality(result: CentralityVector, graph: Graph, stream: TextIO) -> None:
    stream.write("node,centrality\n")
    for v in sorted(range(graph.n), key=lambda i: label_sort_key(graph.labels[i])):
        stream.write(f"{graph.labels[v]},{result.scores[v]:#.10g}\n")


def _write_timings(timings: dict) -> None:
    for phase in ("brandes", "build_sk", "brandes_sk", "finish"):
        if phase in timings:
            sys.stderr.write(f"{phase},{timings[phase]:.6f}\n")


def _emit(args, graph: Graph, result: CentralityVector) -> None:
    if args.unordered_pairs:
        result = result.unordered()
    with _output(args.out) as fh:
        write_centrality(result, graph, fh)
    _write_timings(result.timings)


def cmd_exact(args) -> None:
    graph = _read_graph(args.graph)
    targets = _read_targets(args.targets, graph)
    t0 = time.perf_counter()
    result = brandes(graph, targets, args.epsilon, args.threads)
    result.timings = {"brandes": time.perf_counter() - t0}
    _emit(args, graph, result)


def cmd_skeleton(args) -> None:
    graph = _read_graph(args.graph)
    targets = _read_targets(args.targets, graph)
    partition = _read_partition(args, graph)
    if args.dump_skeleton:
        sk = target_skeleton(graph, partition, targets, args.mode, args.epsilon)
        with open(args.dump_skeleton, "w", encoding="utf-8") as fh:
            sk.dump(fh)
    result = brandes_pp(graph, partition, targets, args.epsilon, args.threads, args.mode)
    _emit(args, graph, result)


def cmd_all(args) -> None:
    graph = _read_graph(args.graph)
    partition = _read_partition(args, graph)
    _emit(args, graph, brandes_pp_all(graph, partition, args.epsilon, args.threads))


def cmd_oracle(args) -> None:
    graph = _read_graph(args.graph)
    targets = _read_targets(args.targets, graph)
    _emit(args, graph, oracle_betweenness(graph, targets, args.epsilon))


def cmd_partition(args) -> None:
    graph = _read_graph(args.graph)
    part = bfs_balanced_partition(graph, args.k, args.seed)
    with _output(args.out) as fh:
        dump_partition(part, graph, fh)


def cmd_gen(args) -> None:
    kind = args.kind
    opts = dict(seed=args.seed, max_weight=args.max_weight)
    partition = None
    if kind == "planted":
        graph, partition = generators.planted_partition(
            args.k, args.size, args.p_in, args.p_out, **opts
        )
    elif kind == "erdos-renyi":
        graph = generators.erdos_renyi(args.n, args.p, **opts)
    elif kind == "path":
        graph = generators.path_graph(args.n, **opts)
    elif kind == "cycle":
        graph = generators.cycle_graph(args.n, **opts)
    else:
        graph = generators.star_graph(args.n, **opts)

    if args.emit_partition:
        if partition is None:
            raise UsageError("--emit-partition needs the planted generator")
        with open(args.emit_partition, "w", encoding="utf-8") as fh:
            dump_partition(partition, graph, fh)
    if args.emit_targets is not None:
        if not args.targets_out:
            raise UsageError("--emit-targets needs --targets-out")
        targets = generators.random_targets(graph, args.emit_targets, args.seed)
        with open(args.targets_out, "w", encoding="utf-8") as fh:
            for v in targets:
                fh.write(f"{graph.labels[v]}\n")
    with _output(args.out) as fh:
        dump_edge_list(graph, fh)


def cmd_bench(args) -> None:
    graph = _read_graph(args.graph)
    targets = _read_targets(args.targets, graph)
    partitions = {}
    for path in args.partition or ():
        with open(path, encoding="utf-8") as fh:
            partitions[path] = load_partition(fh, graph)
    for k in args.auto_partition or ():
        partitions[f"bfs-{k}"] = bfs_balanced_partition(graph, k, args.seed)
    if not partitions:
        raise UsageError("bench needs at least one --partition or --auto-partition")
    rows = run_bench(
        graph, partitions, targets, args.repetitions, args.mode, args.epsilon, args.threads
    )
    with _output(args.out) as fh:
        write_report(rows, fh)


def _common(p: argparse.ArgumentParser, targets: bool, partition: bool) -> None:
    p.add_argument("--graph", required=True, help="edge list: 'u v [w]' per line")
    if targets:
        p.add_argument("--targets", required=True, help="file of target node labels")
    if partition:
        p.add_argument("--partition", help="file of 'node part' lines")
        p.add_argument("--auto-partition", type=int, metavar="K", help="built-in BFS partition into K parts")
        p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", type=float, default=EPSILON)
    p.add_argument("--threads", type=int, default=default_workers())
    p.add_argument("--unordered-pairs", action="store_true", help="halve scores")
    p.add_argument("--out", help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skelbc", description="Exact betweenness centrality via graph skeletons.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("exact", help="baseline Brandes over a target set")
    _common(p, targets=True, partition=False)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("skeleton", help="skeleton-based computation over a target set")
    _common(p, targets=True, partition=True)
    p.add_argument("--mode", choices=MODES, default=PIN)
    p.add_argument("--dump-skeleton", metavar="PATH", help="write 'f q dist mult' skeleton edges")
    p.set_defaults(func=cmd_skeleton)

    p = sub.add_parser("all", help="skeleton-based computation over all node pairs")
    _common(p, targets=False, partition=True)
    p.set_defaults(func=cmd_all)

    p = sub.add_parser("oracle", help="brute-force reference (small graphs)")
    _common(p, targets=True, partition=False)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("partition", help="built-in BFS partitioner")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("gen", help="synthetic graph generators")
    p.add_argument("kind", choices=("planted", "erdos-renyi", "path", "cycle", "star"))
    p.add_argument("--n", type=int, default=10, help="nodes (path/cycle/erdos-renyi) or leaves (star)")
    p.add_argument("--p", type=float, default=0.1, help="edge probability (erdos-renyi)")
    p.add_argument("--k", type=int, default=2, help="communities (planted)")
    p.add_argument("--size", type=int, default=10, help="community size (planted)")
    p.add_argument("--p-in", type=float, default=0.5)
    p.add_argument("--p-out", type=float, default=0.01)
    p.add_argument("--max-weight", type=int, default=1, help="integer weights drawn from 1..W")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--emit-partition", metavar="PATH")
    p.add_argument("--emit-targets", type=int, metavar="COUNT")
    p.add_argument("--targets-out", metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="baseline vs skeleton wall-clock report")
    p.add_argument("--graph", required=True)
    p.add_argument("--targets", required=True)
    p.add_argument("--partition", action="append", help="partition file (repeatable)")
    p.add_argument("--auto-partition", type=int, action="append", metavar="K")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repetitions", type=int, default=3)
    p.add_argument("--mode", choices=MODES, default=PIN)
    p.add_argument("--epsilon", type=float, default=EPSILON)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"skelbc: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (OSError, ValueError, KeyError, IndexError) as exc:
        print(f"skelbc: error: {exc}", file=sys.stderr)
        return DATA_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
