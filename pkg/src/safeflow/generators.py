"""Extremal families for the decomposition-based enumerator, and random flows.

Both extremal families share the same skeleton on ``4k`` vertices: a chain
``a_1..a_k``, a chain ``b_1..b_k``, a layer ``C`` fed by ``a_k`` and a layer
``D`` draining into ``b_1``, joined by a chosen subset of ``C x D``.
Consecutive chain vertices are linked by two parallel edges, one of which
is a unit "leak" edge. ``C x D`` edges carry ``k`` units each.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable

from .graph import FlowDAG, FlowError, build


class InvalidSpec(FlowError):
    pass


def a(k, i):
    return i - 1


def b(k, i):
    return k + i - 1


def c(k, i):
    return 2 * k + i - 1


def d(k, i):
    return 3 * k + i - 1


def full_cd(k: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, k + 1) for j in range(1, k + 1)]


def _check_cd(k, cd_edges):
    if k < 1:
        raise InvalidSpec("k must be >= 1")
    cd = sorted(set((int(i), int(j)) for i, j in cd_edges))
    if not cd:
        raise InvalidSpec("need at least one C x D edge")
    for i, j in cd:
        if not (1 <= i <= k and 1 <= j <= k):
            raise InvalidSpec(f"C x D pair {(i, j)} out of range 1..{k}")
    return cd


def _skeleton(k, cd, chain_pairs):
    """Edge triples; ``chain_pairs`` maps chain step index -> (heavy, leak)."""
    total = k * len(cd)
    outdeg = {i: 0 for i in range(1, k + 1)}
    indeg = {j: 0 for j in range(1, k + 1)}
    for i, j in cd:
        outdeg[i] += 1
        indeg[j] += 1
    triples = []
    for i in range(1, k):
        heavy, leak = chain_pairs(i, total)
        triples.append((a(k, i), a(k, i + 1), heavy))
        triples.append((a(k, i), a(k, i + 1), leak))
    for i in range(1, k + 1):
        if outdeg[i]:
            triples.append((a(k, k), c(k, i), k * outdeg[i]))
    for i, j in cd:
        triples.append((c(k, i), d(k, j), k))
    for j in range(1, k + 1):
        if indeg[j]:
            triples.append((d(k, j), b(k, 1), k * indeg[j]))
    for i in range(1, k):
        heavy, leak = chain_pairs(k - i, total)  # mirror of the A side
        triples.append((b(k, i), b(k, i + 1), heavy))
        triples.append((b(k, i), b(k, i + 1), leak))
    return triples


def gen_worst(k: int, cd_edges: Iterable[tuple[int, int]] | None = None) -> FlowDAG:
    """Every chain step leaks one unit, so a path from ``a_i`` to ``b_1`` keeps
    excess ``i`` and the maximal safe paths are ``a_i .. b_i`` per C x D edge."""
    cd = _check_cd(k, full_cd(k) if cd_edges is None else cd_edges)
    triples = _skeleton(k, cd, lambda i, total: (total - 1, 1))
    return build(triples, n=4 * k)


def gen_best(k: int, cd_edges: Iterable[tuple[int, int]] | None = None) -> FlowDAG:
    """Like :func:`gen_worst`, but the two edges ``a_{k-1} -> a_k`` and the
    two edges ``b_1 -> b_2`` split the flow evenly, which cuts every safe
    path through ``C x D`` down to ``a_k -> c -> d -> b_1``."""
    if k < 2:
        raise InvalidSpec("best case needs k >= 2")
    cd = _check_cd(k, full_cd(k) if cd_edges is None else cd_edges)

    def pairs(i, total):
        if i == k - 1:
            half = Fraction(total, 2)
            half = half.numerator if half.denominator == 1 else half
            return half, half
        return total - 1, 1

    return build(_skeleton(k, cd, pairs), n=4 * k)


def gen_random(n: int, paths: int, max_w: int, seed: int, *, parallel: float = 0.0) -> FlowDAG:
    """Superpose ``paths`` random weighted source-to-sink paths.

    Vertices get a random topological position and a role (source, sink or
    internal); paths run from a source to a later sink through internal
    vertices only, so conservation holds by construction. With
    ``parallel > 0`` a hop may open a fresh parallel edge instead of reusing
    the existing one.
    """
    if n < 2:
        raise InvalidSpec("n must be >= 2")
    if paths < 1 or max_w < 1:
        raise InvalidSpec("need paths >= 1 and max_w >= 1")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    roles = [rng.choice("sit") for _ in range(n)]
    # force at least one usable source/sink pair
    i, j = sorted(rng.sample(range(n), 2))
    roles[i], roles[j] = "s", "t"
    srcs = [p for p in range(n) if roles[p] == "s"]

    edges: dict[tuple[int, int], list[int]] = {}
    for _ in range(paths):
        while True:
            s = rng.choice(srcs)
            sinks = [p for p in range(s + 1, n) if roles[p] == "t"]
            if sinks:
                break
        t = rng.choice(sinks)
        middle = [p for p in range(s + 1, t) if roles[p] == "i" and rng.random() < 0.5]
        hops = [s] + middle + [t]
        wt = rng.randint(1, max_w)
        for x, y in zip(hops, hops[1:]):
            key = (order[x], order[y])
            slots = edges.setdefault(key, [])
            if not slots or (parallel and rng.random() < parallel):
                slots.append(0)
                slots[-1] += wt
            else:
                slots[rng.randrange(len(slots))] += wt
    triples = [(t, h, w) for (t, h), ws in sorted(edges.items()) for w in ws]
    return build(triples, n=n)
