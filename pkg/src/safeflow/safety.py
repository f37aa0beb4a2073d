"""Excess flow of a path and the safety test built on it.

A path is w-safe exactly when its excess flow is at least w, so every
question here reduces to a sum over the path's own edges and the
precomputed per-vertex in/out flows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import FlowDAG, FlowError, InvalidPath, Weight


class InvalidExtension(FlowError):
    pass


class NonPositiveW(FlowError):
    pass


def excess_flow(g: FlowDAG, p: Sequence[int], *, check: bool = True) -> Weight:
    """Edge weights along ``p`` minus the out-flow of its internal vertices."""
    if check:
        g.check_path(p)
    w, heads, f_out = g.weights, g.heads, g.f_out
    total = w[p[0]]
    for e in p[1:]:
        # tail of e is an internal vertex of p
        total += w[e] - f_out[g.tails[e]]
    return total


def excess_flow_in(g: FlowDAG, p: Sequence[int], *, check: bool = True) -> Weight:
    """Same value as :func:`excess_flow`, charging internal in-flow instead."""
    if check:
        g.check_path(p)
    w, f_in = g.weights, g.f_in
    total = w[p[0]]
    for e in p[1:]:
        total += w[e] - f_in[g.tails[e]]
    return total


def diverging_excess(g: FlowDAG, p: Sequence[int]) -> Weight:
    """First edge weight minus every sibling out-edge leaving an internal vertex."""
    g.check_path(p)
    total = g.weights[p[0]]
    for e in p[1:]:
        for s in g.out_edges[g.tails[e]]:
            if s != e:
                total -= g.weights[s]
    return total


def converging_excess(g: FlowDAG, p: Sequence[int]) -> Weight:
    """Last edge weight minus every sibling in-edge entering an internal vertex."""
    g.check_path(p)
    total = g.weights[p[-1]]
    for e in p[:-1]:
        for s in g.in_edges[g.heads[e]]:
            if s != e:
                total -= g.weights[s]
    return total


def is_w_safe(g: FlowDAG, p: Sequence[int], w) -> bool:
    if w <= 0:
        raise NonPositiveW(f"w must be positive, got {w}")
    return excess_flow(g, p) >= w


def is_safe(g: FlowDAG, p: Sequence[int]) -> bool:
    return excess_flow(g, p) > 0


def extend_right_delta(g: FlowDAG, p: Sequence[int], e: int, excess: Weight | None = None) -> Weight:
    """Excess of ``p + (e,)``; O(1) when the excess of ``p`` is passed in."""
    if not p or g.heads[p[-1]] != g.tails[e]:
        raise InvalidExtension(f"edge {e} does not continue the path")
    if excess is None:
        excess = excess_flow(g, p, check=False)
    return excess - right_cost(g, e)


def extend_left_delta(g: FlowDAG, e: int, p: Sequence[int], excess: Weight | None = None) -> Weight:
    """Excess of ``(e,) + p``; O(1) when the excess of ``p`` is passed in."""
    if not p or g.tails[p[0]] != g.heads[e]:
        raise InvalidExtension(f"edge {e} does not precede the path")
    if excess is None:
        excess = excess_flow(g, p, check=False)
    return excess - left_cost(g, e)


def right_cost(g: FlowDAG, e: int) -> Weight:
    """Amount by which appending edge ``e`` lowers a path's excess."""
    return g.f_out[g.tails[e]] - g.weights[e]


def left_cost(g: FlowDAG, e: int) -> Weight:
    """Amount by which prepending edge ``e`` lowers a path's excess."""
    return g.f_in[g.heads[e]] - g.weights[e]


@dataclass(frozen=True)
class Verdict:
    excess: Weight
    safe: bool
    edges_touched: int


def verify(g: FlowDAG, p: Sequence[int]) -> Verdict:
    """Check one path, reading only the path's own edges.

    ``edges_touched`` counts edge records read; it always equals ``len(p)``
    because in/out flows come from the per-vertex tables.
    """
    if len(p) == 0:
        raise InvalidPath("path must contain at least one edge")
    touched = 0
    w, tails, heads, f_out = g.weights, g.tails, g.heads, g.f_out
    prev = None
    total = 0
    for i, e in enumerate(p):
        if not (isinstance(e, int) and 0 <= e < g.m):
            raise InvalidPath(f"unknown edge id {e!r}")
        touched += 1
        t = tails[e]
        if prev is not None and t != prev:
            raise InvalidPath(f"edge {e} does not continue the path at vertex {prev}")
        total += w[e] if i == 0 else w[e] - f_out[t]
        prev = heads[e]
    if len(set(g.path_vertices(p))) != len(p) + 1:
        raise InvalidPath("path repeats a vertex")
    return Verdict(total, total > 0, touched)
