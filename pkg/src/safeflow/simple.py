"""Maximal safe paths from a flow decomposition by a two-pointer scan."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .decomposition import FlowDecomposition, decompose
from .graph import FlowDAG, Weight
from .safety import left_cost, right_cost


class EdgeTrie:
    """Trie keyed on edge-id sequences; ``insert`` reports novelty."""

    __slots__ = ("root", "size", "steps")

    _END = -1

    def __init__(self):
        self.root: dict = {}
        self.size = 0
        self.steps = 0

    def insert(self, seq: Sequence[int], value=True) -> bool:
        node = self.root
        for e in seq:
            self.steps += 1
            node = node.setdefault(e, {})
        if self._END in node:
            return False
        node[self._END] = value
        self.size += 1
        return True

    def get(self, seq: Sequence[int], default=None):
        node = self.root
        for e in seq:
            node = node.get(e)
            if node is None:
                return default
        return node.get(self._END, default)

    def __contains__(self, seq) -> bool:
        return self.get(seq, self._END) is not self._END

    def __len__(self) -> int:
        return self.size


@dataclass
class CompactPath:
    path: tuple
    intervals: list  # (i, j, excess): edges path[i..j] inclusive form one maximal safe path

    def windows(self):
        for i, j, x in self.intervals:
            yield self.path[i:j + 1], x


@dataclass
class ConciseRepresentation:
    paths: list[CompactPath]
    decomposition: FlowDecomposition | None = None
    stats: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return sum(len(c.path) for c in self.paths)

    def maximal_paths(self) -> dict:
        """Map each maximal safe path (edge tuple) to its excess."""
        out = {}
        for c in self.paths:
            for p, x in c.windows():
                out[p] = x
        return out


def maximal_safe_in_path(g: FlowDAG, p: Sequence[int], counter: list | None = None):
    """Windows ``(i, j, excess)`` of ``p`` that are safe and maximal within ``p``.

    Safety is inherited by subpaths, so both ends only ever move forward:
    extend the right end while the excess stays positive, otherwise drop the
    left edge. A window is reported when it stops extending and is not
    inside the previously reported one.
    """
    k = len(p)
    if k == 0:
        return []
    w = g.weights
    out = []
    i = j = 0
    x = w[p[0]]
    last_j = -1
    steps = 0
    while True:
        steps += 1
        if j + 1 < k:
            nxt = x - right_cost(g, p[j + 1])
            if nxt > 0:
                j += 1
                x = nxt
                continue
        if j != last_j:
            out.append((i, j, x))
            last_j = j
        if j + 1 == k:
            break
        if i == j:
            i = j = j + 1
            x = w[p[j]]
        else:
            x += left_cost(g, p[i])
            i += 1
    if counter is not None:
        counter[0] += steps
    return out


def _canonically_extendable(g: FlowDAG, q: Sequence[int], x: Weight) -> bool:
    """Whether ``q`` has a safe one-edge extension in ``g``.

    Only the heaviest sibling at each end needs testing: if any extension is
    safe, the heaviest one is.
    """
    head_in = g.max_in_edge(g.tails[q[0]])
    if head_in is not None and x - left_cost(g, head_in) > 0:
        return True
    tail_out = g.max_out_edge(g.heads[q[-1]])
    if tail_out is not None and x - right_cost(g, tail_out) > 0:
        return True
    return False


def _merge_overlapping(windows):
    """Group windows that share at least one edge; yields (lo, hi, members)."""
    groups = []
    for i, j, x in windows:
        if groups and i <= groups[-1][1]:
            g = groups[-1]
            g[1] = max(g[1], j)
            g[2].append((i, j, x))
        else:
            groups.append([i, j, [(i, j, x)]])
    return groups


def enumerate_simple(g: FlowDAG, decomposition: FlowDecomposition | None = None) -> ConciseRepresentation:
    """All maximal safe paths, reported as a concise set of covering paths."""
    dec = decomposition if decomposition is not None else decompose(g)
    scan = [0]
    checks = 0
    n_windows = 0
    candidates = []  # (edges, intervals relative to edges)
    for wp in dec.paths:
        p = wp.edges
        kept = []
        for i, j, x in maximal_safe_in_path(g, p, scan):
            checks += 1
            if not _canonically_extendable(g, p[i:j + 1], x):
                kept.append((i, j, x))
                n_windows += 1
        for lo, hi, members in _merge_overlapping(kept):
            candidates.append((p[lo:hi + 1], [(i - lo, j - lo, x) for i, j, x in members]))

    seen = EdgeTrie()
    unique = []
    for edges, intervals in candidates:
        if seen.insert(edges):
            unique.append(CompactPath(edges, intervals))

    # drop covering paths that sit inside another one; any such path starts
    # with one of its host's intervals, so index hosts by interval
    by_window = {}
    for idx, c in enumerate(unique):
        for i, j, _ in c.intervals:
            by_window.setdefault(c.path[i:j + 1], []).append((idx, i))
    filtered = []
    contain_steps = 0
    for idx, c in enumerate(unique):
        i0, j0, _ = c.intervals[0]
        first = c.path[i0:j0 + 1]
        inside = False
        for host, at in by_window[first]:
            if host == idx:
                continue
            hp = unique[host].path
            start = at - i0
            contain_steps += 1
            if start < 0 or start + len(c.path) > len(hp):
                continue
            contain_steps += len(c.path)
            if hp[start:start + len(c.path)] == c.path:
                inside = True
                break
        if not inside:
            filtered.append(c)

    stats = {
        "pf": dec.size,
        "pf_paths": len(dec.paths),
        "decompose_steps": dec.steps,
        "scan_steps": scan[0],
        "filter_checks": checks,
        "trie_steps": seen.steps,
        "contain_steps": contain_steps,
    }
    stats["simple_ops"] = (
        stats["decompose_steps"] + stats["scan_steps"] + checks
        + stats["trie_steps"] + contain_steps
    )
    rep = ConciseRepresentation(filtered, dec, stats)
    stats["pc"] = rep.size
    stats["windows"] = n_windows
    return rep
