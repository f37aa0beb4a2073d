"""Shared corpora and structural checks for the test modules."""

import random

from hypothesis import strategies as st

from safeflow.generators import gen_random
from safeflow.graph import build


def diamond():
    return build([(0, 1, 3), (0, 2, 2), (1, 3, 3), (2, 3, 2)])


def chain(weight=5, length=4):
    return build([(i, i + 1, weight) for i in range(length)])


def leaky():
    # 0 -> 1 splits 3/1 and both branches rejoin at 4
    return build([(0, 1, 4), (1, 2, 3), (1, 3, 1), (2, 4, 3), (3, 4, 1)])


def corpus_graph(seed):
    """The enumerator-agreement corpus: n <= 12, seeded."""
    r = random.Random(seed)
    n = r.randint(3, 12)
    return gen_random(n, r.randint(2, 12), r.choice([1, 2, 3, 5, 8]), seed,
                      parallel=r.choice([0, 0.2, 0.5]))


def small_flow_graph(seed):
    """n <= 6 and integer flow value <= 5, for the decomposition oracle.

    Unit paths run between one or two sources and one or two sinks through a
    random subset of the middle vertices, so they cross and share edges.
    """
    r = random.Random(10_000 + seed)
    n = r.randint(3, 6)
    sources = [0, 1][:r.choice([1, 1, 2])] if n > 3 else [0]
    sinks = [n - 1, n - 2][:r.choice([1, 1, 2])] if n > 3 else [n - 1]
    middle = [v for v in range(n) if v not in sources and v not in sinks]
    edges = {}
    for _ in range(r.randint(1, 5)):
        hops = [r.choice(sources)]
        hops += [v for v in middle if r.random() < 0.6]
        hops.append(r.choice(sinks))
        for key in zip(hops, hops[1:]):
            slots = edges.setdefault(key, [])
            if not slots or r.random() < 0.25:
                slots.append(0)
                slots[-1] += 1
            else:
                slots[r.randrange(len(slots))] += 1
    return build([(t, h, w) for (t, h), ws in sorted(edges.items()) for w in ws], n=n)


@st.composite
def flow_dags(draw, max_n=10, max_paths=6, max_w=6):
    n = draw(st.integers(2, max_n))
    paths = draw(st.integers(1, max_paths))
    w = draw(st.integers(1, max_w))
    seed = draw(st.integers(0, 2**32 - 1))
    parallel = draw(st.sampled_from([0.0, 0.3]))
    return gen_random(n, paths, w, seed, parallel=parallel)


def random_path(g, rng, max_len=None):
    """Random walk forward from a random edge."""
    e = rng.randrange(g.m)
    p = [e]
    while max_len is None or len(p) < max_len:
        outs = g.out_edges[g.heads[p[-1]]]
        if not outs or rng.random() < 0.15:
            break
        p.append(rng.choice(outs))
    return tuple(p)


def merges_then_diverges(g, p, q):
    """Whether ``q`` enters a vertex of ``p`` by a different edge, follows it,
    and then leaves by a different edge."""
    where = {g.tails[e]: i for i, e in enumerate(p)}
    for j in range(1, len(q)):
        x = g.tails[q[j]]
        i = where.get(x)
        if i is None or i == 0 or p[i - 1] == q[j - 1]:
            continue
        while i < len(p) and j < len(q) and p[i] == q[j]:
            i += 1
            j += 1
        if i < len(p) and j < len(q):
            return True
    return False


def heavy_edge(g, u, v):
    """The heaviest u -> v edge, smallest id on ties."""
    best = None
    for e in g.out_edges[u]:
        if g.heads[e] == v and (best is None or g.weights[e] > g.weights[best]):
            best = e
    return best


def heavy_path(g, vertices):
    return tuple(heavy_edge(g, u, v) for u, v in zip(vertices, vertices[1:]))
