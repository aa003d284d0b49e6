"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 memory-budget
abort.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from ._backend import BACKEND
from .cover import Cover, extract, read_cover, write_cover
from .errors import MemoryBudgetError, ParseError
from .graph import Graph, build_dag, degeneracy_ordering, load_edgelist
from .kclique import count_kcliques, iter_kcliques
from .onmi import onmi
from .oracle import brute_force_cpm
from .percolation import run_cpm, run_cpmz
from .stats import report

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cliqueperc",
                description="Overlapping communities by clique percolation.")
    p.add_argument("--version", action="version",
                   version=f"cliqueperc {__version__} ({BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sp = sub.add_parser("count", help="count the k-cliques of a graph")
    sp.add_argument("-k", type=int, required=True, metavar="K")
    sp.add_argument("graph", metavar="GRAPH")

    sp = sub.add_parser("cpm", help="exact percolation communities")
    sp.add_argument("-k", type=int, required=True, metavar="K")
    sp.add_argument("graph", metavar="GRAPH")
    sp.add_argument("-o", "--output", metavar="OUT", default=None,
                    help="community file (default: stdout)")
    sp.add_argument("--stats", metavar="S", default=None, help="write run stats here")
    sp.add_argument("--json", action="store_true", help="stats file as JSON")
    sp.add_argument("--limit-mem", type=int, metavar="BYTES", default=None,
                    help="abort (exit 3) when estimated key storage exceeds BYTES")

    sp = sub.add_parser("cpmz", help="memory-lean relaxed communities")
    sp.add_argument("-k", type=int, required=True, metavar="K")
    sp.add_argument("-z", type=int, required=True, metavar="Z")
    sp.add_argument("graph", metavar="GRAPH")
    sp.add_argument("-o", "--output", metavar="OUT", default=None)
    sp.add_argument("--stats", metavar="S", default=None)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--strict-reduce", action="store_true",
                    help="run the root reduction on every z-sub-clique visit")
    sp.add_argument("--order", metavar="FILE", default=None,
                    help="process exactly these k-cliques, in file order "
                         "(one clique per line, external ids)")
    sp.add_argument("--limit-mem", type=int, metavar="BYTES", default=None)

    sp = sub.add_parser("onmi", help="similarity of two community files")
    sp.add_argument("cover_a", metavar="A")
    sp.add_argument("cover_b", metavar="B")

    # debugging aid, kept out of the help listing (no help string)
    sp = sub.add_parser("oracle",
                        description="Brute-force communities (small graphs only).")
    sp.add_argument("-k", type=int, required=True, metavar="K")
    sp.add_argument("graph", metavar="GRAPH")

    return p


def _write_output(cover: Cover, path) -> None:
    if path is None:
        write_cover(cover, sys.stdout)
    else:
        write_cover(cover, path)


def _read_order_file(path: str, g: Graph, k: int) -> list[tuple]:
    cliques = []
    with open(path) as fh:
        for line_no, raw in enumerate(fh, start=1):
            toks = raw.split()
            if not toks:
                continue
            if len(toks) != k:
                raise ParseError(f"line {line_no}: expected {k} ids, got {len(toks)}")
            try:
                ext = [int(t) for t in toks]
            except ValueError:
                raise ParseError(f"line {line_no}: non-integer token") from None
            try:
                internal = sorted(g.label_map[x] for x in ext)
            except KeyError as e:
                raise ParseError(f"line {line_no}: unknown vertex {e.args[0]}") from None
            if len(set(internal)) != k:
                raise ParseError(f"line {line_no}: repeated vertex")
            for i in range(k - 1):
                for j in range(i + 1, k):
                    if not g.has_edge(internal[i], internal[j]):
                        raise ParseError(f"line {line_no}: not a clique in the graph")
            cliques.append(tuple(internal))
    return cliques


def _run_percolation(args) -> int:
    g = load_edgelist(args.graph)
    if args.command == "cpmz" and args.order is not None:
        stream = _read_order_file(args.order, g, args.k)
    else:
        dag = build_dag(g, degeneracy_ordering(g))
        stream = iter_kcliques(dag, args.k)
    if args.command == "cpm":
        result = run_cpm(stream, args.k, key_budget_bytes=args.limit_mem)
    else:
        result = run_cpmz(stream, args.k, args.z,
                          strict_reduce=args.strict_reduce,
                          key_budget_bytes=args.limit_mem)
    _write_output(extract(result, g), args.output)
    if args.stats is not None:
        with open(args.stats, "w") as fh:
            fh.write(report(result, json_format=args.json))
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "count":
            g = load_edgelist(args.graph)
            print(count_kcliques(g, args.k))
            return 0
        if args.command in ("cpm", "cpmz"):
            return _run_percolation(args)
        if args.command == "onmi":
            a = read_cover(args.cover_a)
            b = read_cover(args.cover_b)
            universe = a.node_set() | b.node_set()
            print(f"universe: {len(universe)} covered nodes "
                  f"(uncovered nodes excluded)", file=sys.stderr)
            print(f"{onmi(a, b, len(universe)):.6f}")
            return 0
        if args.command == "oracle":
            g = load_edgelist(args.graph)
            _write_output(brute_force_cpm(g, args.k), None)
            return 0
        raise AssertionError(f"unhandled command {args.command}")
    except MemoryBudgetError as e:
        print(f"cliqueperc: aborted: {e}", file=sys.stderr)
        return 3
    except ParseError as e:
        print(f"cliqueperc: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"cliqueperc: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"cliqueperc: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
