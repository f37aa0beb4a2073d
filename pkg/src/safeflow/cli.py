"""Command-line front end: verify, decompose, enumerate, oracle, gen, bench."""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .decomposition import decompose
from .funnel import enumerate_funnel
from .generators import full_cd, gen_best, gen_random, gen_worst
from .graph import FlowError, dumps, fmt, read
from .oracle import oracle_maximal_safe
from .safety import verify
from .simple import enumerate_simple

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_UNSAFE = 0, 1, 2, 3

BENCH_HEADER = ["family", "k", "n", "m", "pf", "pc", "simple_ops", "funnel_ops",
                "heap_ops", "simple_ns", "funnel_ns"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse would print the whole usage block; keep diagnostics to one line
        raise UsageError(message)


def _color() -> bool:
    env = os.environ.get("SAFEFLOW_COLOR")
    if env is not None:
        return env == "1"
    return sys.stderr.isatty()


def _diag(msg: str) -> None:
    tag = "\x1b[31merror\x1b[0m" if _color() else "error"
    print(f"safeflow: {tag}: {msg}", file=sys.stderr)


def _ints(tokens, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise UsageError(f"{what} must be integers") from None


def _vseq(g, p) -> str:
    return " ".join(map(str, g.path_vertices(p)))


def _sorted_paths(g, paths: dict):
    return sorted(paths.items(), key=lambda kv: (g.path_vertices(kv[0]), kv[0]))


def _print_paths(g, paths: dict, out) -> None:
    for p, x in _sorted_paths(g, paths):
        out.write(f"{fmt(x)}\t{_vseq(g, p)}\n")


def _print_stats(stats: dict, out, prefix="") -> None:
    for k in sorted(stats):
        out.write(f"{prefix}{k}={stats[k]}\n")


# -- subcommands ---------------------------------------------------------------


def cmd_verify(args, out) -> int:
    g = read(args.graph)
    if args.edges is not None:
        if args.vertices:
            raise UsageError("give either a vertex sequence or --edges, not both")
        p = _ints(args.edges.replace(",", " ").split(), "edge ids")
    else:
        vs = _ints(args.vertices, "vertices")
        if len(vs) < 2:
            raise UsageError("a path needs at least two vertices")
        p = g.path_from_vertices(vs)
    v = verify(g, p)
    out.write(f"excess={fmt(v.excess)} safe={'true' if v.safe else 'false'}\n")
    return EXIT_OK if v.safe else EXIT_UNSAFE


def cmd_decompose(args, out) -> int:
    g = read(args.graph)
    for wp in decompose(g).paths:
        out.write(f"{fmt(wp.weight)}\t{_vseq(g, wp.edges)}\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    g = read(args.graph)
    algo = args.algo
    if args.concise and algo == "funnel":
        raise UsageError("--concise needs the simple algorithm")
    if args.triplets and algo == "simple":
        raise UsageError("--triplets needs the funnel algorithm")
    rep = enumerate_simple(g) if algo in ("simple", "both") else None
    fr = enumerate_funnel(g) if algo in ("funnel", "both") else None
    if rep is not None and fr is not None and rep.maximal_paths() != fr.maximal_paths(g):
        _diag("simple and funnel enumerators disagree")
        return EXIT_MISMATCH

    if args.concise:
        rows = []
        for c in rep.paths:
            spans = " ".join(f"{i}:{j}:{fmt(x)}" for i, j, x in c.intervals)
            rows.append((g.path_vertices(c.path), c.path, spans))
        for vs, _, spans in sorted(rows):
            out.write(f"{' '.join(map(str, vs))}\t{spans}\n")
    elif args.triplets:
        for u, t in fr.triplets():
            out.write(f"{u}\t{t.characteristic_edge}\t{t.start_vertex}\t{fmt(t.excess)}\n")
    else:
        paths = rep.maximal_paths() if rep is not None else fr.maximal_paths(g)
        _print_paths(g, paths, out)

    if args.stats:
        if rep is not None:
            _print_stats(rep.stats, out, "simple." if fr is not None else "")
        if fr is not None:
            _print_stats(fr.stats, out, "funnel." if rep is not None else "")
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    g = read(args.graph)
    _print_paths(g, oracle_maximal_safe(g, max_n=args.max_n), out)
    return EXIT_OK


def _parse_cd(text, k):
    if text is None or text == "full":
        return full_cd(k)
    if text == "diag":
        return [(i, i) for i in range(1, k + 1)]
    pairs = []
    for item in text.split(","):
        try:
            i, j = item.split(":")
            pairs.append((int(i), int(j)))
        except ValueError:
            raise UsageError(f"bad C x D pair {item!r}, expected i:j") from None
    return pairs


def _generate(family, k, cd=None, *, seed=0, paths=None, max_w=5, parallel=0.0):
    if family == "worst":
        return gen_worst(k, _parse_cd(cd, k))
    if family == "best":
        return gen_best(k, _parse_cd(cd, k))
    return gen_random(k, paths if paths is not None else k, max_w, seed, parallel=parallel)


def cmd_gen(args, out) -> int:
    if args.family == "random":
        if args.n is None:
            raise UsageError("--family random needs --n")
        g = _generate("random", args.n, seed=args.seed, paths=args.paths,
                      max_w=args.max_w, parallel=args.parallel)
    else:
        if args.k is None:
            raise UsageError(f"--family {args.family} needs --k")
        g = _generate(args.family, args.k, args.cd)
    text = dumps(g)
    if args.output in (None, "-"):
        out.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return EXIT_OK


def bench_row(family: str, k: int, seed: int = 0) -> list:
    g = _generate(family, k, seed=seed)
    t0 = time.perf_counter_ns()
    rep = enumerate_simple(g)
    t1 = time.perf_counter_ns()
    fr = enumerate_funnel(g)
    t2 = time.perf_counter_ns()
    s, f = rep.stats, fr.stats
    return [family, k, g.n, g.m, s["pf"], s["pc"], s["simple_ops"], f["funnel_ops"],
            f["heap_ops"], t1 - t0, t2 - t1]


def cmd_bench(args, out) -> int:
    ks = _ints(args.k.split(","), "--k values")
    if any(k < 1 for k in ks):
        raise UsageError("--k values must be positive")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    jobs = [(args.family, k, args.seed) for k in ks]
    if args.jobs == 1:
        rows = [bench_row(*j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(bench_row, *zip(*jobs)))
    w = csv.writer(out, lineterminator="\n")
    w.writerow(BENCH_HEADER)
    w.writerows(rows)
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="safeflow", description="Safe paths in flow DAGs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="excess flow and safety of one path")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("vertices", nargs="*", help="path as a vertex sequence")
    p.add_argument("--edges", help="path as edge ids (comma or space separated)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="greedy flow decomposition")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("enumerate", help="all maximal safe paths")
    p.add_argument("graph")
    p.add_argument("--algo", choices=("simple", "funnel", "both"), default="simple")
    p.add_argument("--concise", action="store_true", help="print covering paths with intervals")
    p.add_argument("--triplets", action="store_true", help="print raw funnel solution records")
    p.add_argument("--stats", action="store_true", help="append counters as key=value lines")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("oracle", help="maximal safe paths by brute force (small graphs)")
    p.add_argument("graph")
    p.add_argument("--max-n", type=int, default=12)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("--family", choices=("worst", "best", "random"), required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--cd", help="C x D edges: full, diag, or i:j,i:j,...")
    p.add_argument("--n", type=int)
    p.add_argument("--paths", type=int)
    p.add_argument("--max-w", type=int, default=5)
    p.add_argument("--parallel", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="counter sweep over a family, CSV on stdout")
    p.add_argument("--family", choices=("worst", "best", "random"), required=True)
    p.add_argument("--k", default="10,20,40", help="comma-separated sizes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
        return args.func(args, out)
    except SystemExit as ex:  # --help
        return EXIT_OK if not ex.code else EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK
    except (UsageError, FlowError, OSError) as ex:
        _diag(str(ex).splitlines()[0] if str(ex) else type(ex).__name__)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
