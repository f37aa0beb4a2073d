"""Brute-force ground truth. Slow on purpose; small graphs only."""

from __future__ import annotations

from typing import Iterator, Sequence

from .graph import FlowDAG, FlowError
from .safety import excess_flow


class TooLarge(FlowError):
    pass


def all_paths(g: FlowDAG, min_edges: int = 1) -> Iterator[tuple]:
    """Every path of ``g`` with at least ``min_edges`` edges, as edge tuples."""
    def extend(p):
        if len(p) >= min_edges:
            yield p
        for e in g.out_edges[g.heads[p[-1]]]:
            yield from extend(p + (e,))

    for e in range(g.m):
        yield from extend((e,))


def source_sink_paths(g: FlowDAG) -> list[tuple]:
    sinks = set(g.sinks)
    out = []

    def walk(v, p):
        if v in sinks:
            if p:
                out.append(p)
            return
        for e in g.out_edges[v]:
            walk(g.heads[e], p + (e,))

    for s in g.sources:
        walk(s, ())
    return sorted(out)


def unit_decompositions(g: FlowDAG) -> Iterator[tuple]:
    """Every decomposition into unit-weight source-to-sink paths, once each.

    A decomposition is a multiset of paths; choosing paths in non-decreasing
    index order yields each multiset exactly once.
    """
    for w in g.weights:
        if int(w) != w:
            raise TooLarge("unit decompositions need integer flows")
    candidates = source_sink_paths(g)
    residual = [int(w) for w in g.weights]
    remaining = [sum(residual)]
    chosen: list[int] = []

    def rec(start):
        if remaining[0] == 0:
            yield tuple(candidates[i] for i in chosen)
            return
        for i in range(start, len(candidates)):
            p = candidates[i]
            if all(residual[e] > 0 for e in p):
                for e in p:
                    residual[e] -= 1
                remaining[0] -= len(p)
                chosen.append(i)
                yield from rec(i)
                chosen.pop()
                remaining[0] += len(p)
                for e in p:
                    residual[e] += 1

    yield from rec(0)


def _contains(big: Sequence[int], small: Sequence[int]) -> bool:
    k = len(small)
    return any(tuple(big[i:i + k]) == tuple(small) for i in range(len(big) - k + 1))


def oracle_w_safety(g: FlowDAG, p: Sequence[int], *, max_flow: int = 6, max_n: int = 8) -> int:
    """Least number of unit paths containing ``p`` over all decompositions."""
    g.check_path(p)
    if g.n > max_n or g.flow_value() > max_flow:
        raise TooLarge(f"oracle limited to n<={max_n}, flow<={max_flow}")
    best = None
    for dec in unit_decompositions(g):
        hits = sum(1 for q in dec if _contains(q, p))
        if best is None or hits < best:
            best = hits
            if best == 0:
                break
    if best is None:
        raise FlowError("flow admits no decomposition")
    return best


def oracle_w_safety_all(g: FlowDAG, paths, *, max_flow: int = 6, max_n: int = 8) -> dict:
    """:func:`oracle_w_safety` for many paths, enumerating decompositions once."""
    if g.n > max_n or g.flow_value() > max_flow:
        raise TooLarge(f"oracle limited to n<={max_n}, flow<={max_flow}")
    paths = [tuple(p) for p in paths]
    best = {p: None for p in paths}
    for dec in unit_decompositions(g):
        for p in paths:
            hits = sum(1 for q in dec if _contains(q, p))
            if best[p] is None or hits < best[p]:
                best[p] = hits
    return best


def oracle_maximal_safe(g: FlowDAG, *, max_n: int = 12) -> dict:
    """Maximal safe paths by exhaustive listing: path -> excess."""
    if g.n > max_n:
        raise TooLarge(f"oracle limited to n<={max_n}")
    safe = {}
    for p in all_paths(g):
        x = excess_flow(g, p, check=False)
        if x > 0:
            safe[p] = x
    covered = set()
    for p in safe:
        k = len(p)
        for i in range(k):
            for j in range(i + 1, k + 1):
                if j - i < k:
                    covered.add(p[i:j])
    return {p: x for p, x in safe.items() if p not in covered}


def left_maximal_ending_at(g: FlowDAG, v: int) -> set:
    """Safe paths ending at ``v`` that no in-edge extends safely."""
    out = set()
    for p in all_paths(g):
        if g.heads[p[-1]] != v or excess_flow(g, p, check=False) <= 0:
            continue
        if all(excess_flow(g, (e,) + p, check=False) <= 0 for e in g.in_edges[g.tails[p[0]]]):
            out.add(p)
    return out
