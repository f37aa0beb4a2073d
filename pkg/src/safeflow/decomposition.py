from __future__ import annotations

from dataclasses import dataclass, field

from .graph import FlowDAG, Weight, exact


@dataclass(frozen=True)
class WeightedPath:
    edges: tuple
    weight: Weight


@dataclass
class FlowDecomposition:
    paths: list[WeightedPath]
    steps: int = field(default=0, compare=False)  # residual edges inspected

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    @property
    def size(self) -> int:
        """Total number of edges over all paths."""
        return sum(len(p.edges) for p in self.paths)


def decompose(g: FlowDAG) -> FlowDecomposition:
    """Peel bottleneck source-to-sink paths off a residual copy of the flow.

    Each walk starts at the smallest source with residual out-flow and always
    takes the smallest-id out-edge that still carries flow. Every peel zeroes
    at least one edge, so at most ``m`` paths come out.
    """
    residual = list(g.weights)
    # edges whose residual hit zero never come back, so a cursor per vertex
    # makes successor lookup amortised O(1)
    cursor = [0] * g.n
    out = g.out_edges
    paths = []
    steps = 0
    for s in g.sources:
        while True:
            walk = []
            v = s
            while True:
                adj = out[v]
                i = cursor[v]
                while i < len(adj) and residual[adj[i]] == 0:
                    i += 1
                    steps += 1
                cursor[v] = i
                if i == len(adj):
                    break
                e = adj[i]
                walk.append(e)
                steps += 1
                v = g.heads[e]
            if not walk:
                break
            bottleneck = exact(min(residual[e] for e in walk))
            for e in walk:
                residual[e] = exact(residual[e] - bottleneck)
            steps += len(walk)
            paths.append(WeightedPath(tuple(walk), bottleneck))
    assert not any(residual), "conservation guarantees a full peel"
    return FlowDecomposition(paths, steps)


def edge_cover(g: FlowDAG, paths) -> list:
    """Per-edge sum of path weights, for checking a decomposition."""
    cover = [0] * g.m
    for p in paths:
        for e in p.edges:
            cover[e] += p.weight
    return cover
