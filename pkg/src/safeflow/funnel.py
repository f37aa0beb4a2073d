"""Output-sensitive enumeration of maximal safe paths through funnels.

For every vertex ``v`` the union of left-maximal safe paths ending at ``v``
is a funnel: diverging trees (vertices with a unique source path) feeding a
single converging tree rooted at ``v``. Funnels are built in topological
order, each from the funnels of its in-neighbours, and then swept once with
mergeable heaps to find which of their paths are also right-maximal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import FlowDAG, FlowError, Weight
from .heap import HeapElement, MergeableHeap


class DanglingTriplet(FlowError):
    pass


class Funnel:
    """Subgraph of safe paths ending at ``root``, stored as edge ids."""

    __slots__ = ("root", "edges", "in_adj", "out_adj", "child")

    def __init__(self, root: int):
        self.root = root
        self.child: dict[int, int] = {}
        self.edges: set[int] = set()
        self.in_adj: dict[int, list[int]] = {root: []}
        self.out_adj: dict[int, list[int]] = {root: []}

    def __contains__(self, v: int) -> bool:
        return v in self.in_adj

    def has_edge(self, e: int) -> bool:
        return e in self.edges

    def add_edge(self, g: FlowDAG, e: int) -> bool:
        if e in self.edges:
            return False
        self.edges.add(e)
        t, h = g.tails[e], g.heads[e]
        self.out_adj.setdefault(t, []).append(e)
        self.in_adj.setdefault(t, [])
        self.in_adj.setdefault(h, []).append(e)
        self.out_adj.setdefault(h, [])
        return True

    @property
    def vertices(self):
        return self.in_adj.keys()

    def __len__(self) -> int:
        """Vertices plus edges."""
        return len(self.in_adj) + len(self.edges)

    def reverse_topological(self, g: FlowDAG) -> list[int]:
        """Vertices ordered so every edge's head precedes its tail; root first.

        Depth-first from the root over in-edges: every funnel vertex reaches
        the root, so this touches each funnel edge once.
        """
        post = []
        done = {self.root}
        stack = [(self.root, iter(self.in_adj[self.root]))]
        while stack:
            v, it = stack[-1]
            for e in it:
                x = g.tails[e]
                if x not in done:
                    done.add(x)
                    stack.append((x, iter(self.in_adj[x])))
                    break
            else:
                stack.pop()
                post.append(v)
        post.reverse()
        return post

    def sources(self) -> list[int]:
        return [v for v, ins in self.in_adj.items() if not ins]

    def converging(self, g: FlowDAG, order: list[int] | None = None) -> set[int]:
        """Vertices with a unique path to the root inside the funnel."""
        order = order if order is not None else self.reverse_topological(g)
        conv = set()
        for v in order:
            outs = self.out_adj[v]
            if v == self.root or (len(outs) == 1 and g.heads[outs[0]] in conv):
                conv.add(v)
        return conv

    def path_counts(self, g: FlowDAG) -> dict[int, tuple[int, int]]:
        """Per vertex: (paths from a funnel source, paths to the root)."""
        order = self.reverse_topological(g)
        down = {}
        for v in order:
            outs = self.out_adj[v]
            down[v] = 1 if not outs else sum(down[g.heads[e]] for e in outs)
        up = {}
        for v in reversed(order):
            ins = self.in_adj[v]
            up[v] = 1 if not ins else sum(up[g.tails[e]] for e in ins)
        return {v: (up[v], down[v]) for v in order}

    def copy(self) -> "Funnel":
        f = Funnel(self.root)
        f.edges = set(self.edges)
        f.in_adj = {v: list(es) for v, es in self.in_adj.items()}
        f.out_adj = {v: list(es) for v, es in self.out_adj.items()}
        return f

    def __repr__(self) -> str:
        return f"Funnel(root={self.root}, |V|={len(self.in_adj)}, |E|={len(self.edges)})"


@dataclass(frozen=True)
class SolutionTriplet:
    characteristic_edge: int
    start_vertex: int
    excess: Weight


def _bump(stats, key, k=1):
    stats[key] = stats.get(key, 0) + k


# -- construction ------------------------------------------------------------


def build_funnels(g: FlowDAG, stats: dict | None = None) -> list[Funnel]:
    """Funnel of left-maximal safe paths ending at each vertex."""
    stats = stats if stats is not None else {}
    funnels = [Funnel(v) for v in range(g.n)]
    for u in g.topo:
        _build_from(g, u, funnels, stats)
    return funnels


def _build_from(g: FlowDAG, u: int, F: list[Funnel], stats: dict) -> None:
    w, tails, heads, f_in = g.weights, g.tails, g.heads, g.f_in
    outs = g.out_edges[u]
    for e in outs:
        if F[heads[e]].add_edge(g, e):
            _bump(stats, "funnel_edges_added")
    if not outs:
        return
    Fu = F[u]

    # heaviest out-edge: sweep the whole funnel of u once
    estar = g.max_out_edge(u)
    wstar = w[estar]
    Fstar = F[heads[estar]]
    order = Fu.reverse_topological(g)
    best = dict.fromkeys(order, 0)  # max excess of a safe x -> u -> v* path
    best[u] = wstar
    sweep = 0
    for y in order:
        fy, fin_y = best[y], f_in[y]
        for e in Fu.in_adj[y]:
            sweep += 1
            x = tails[e]
            fp = fy - fin_y + w[e]
            if fp > best[x]:
                best[x] = fp
            if fp > 0 and Fstar.add_edge(g, e):
                _bump(stats, "funnel_edges_added")
    _bump(stats, "build_sweep", sweep + len(order))

    others = [e for e in outs if e != estar]
    if not others:
        return
    # every other out-edge extends exactly one path of F_u: the one that keeps
    # taking the heaviest in-edge backwards from u
    suffix_open = list(others)
    pending = sorted(others, key=lambda e: (w[e], e))
    _bump(stats, "sort_items", len(pending))
    head = 0
    back = []  # edges of the walked path, from u backwards
    y = u
    walk = 0
    while head < len(pending):
        e_in = g.max_in_edge(y)
        if e_in is None or not Fu.has_edge(e_in):
            # no safe step left: every remaining chain starts at y
            while head < len(pending):
                _add_prefix(g, F[heads[pending[head]]], back, len(back) - 1, y, stats)
                head += 1
            break
        walk += 1
        back.append(e_in)
        x = tails[e_in]
        gx = best[x] - wstar
        still = []
        for ev in suffix_open:
            _bump(stats, "suffix_checks")
            if gx + w[ev] > 0 and F[heads[ev]].add_edge(g, e_in):
                _bump(stats, "funnel_edges_added")
                still.append(ev)
        suffix_open = still
        while head < len(pending) and gx + w[pending[head]] <= 0:
            # back[-1] enters y; the forward walk from y starts one edge later
            _add_prefix(g, F[heads[pending[head]]], back, len(back) - 2, y, stats)
            head += 1
        y = x
    _bump(stats, "walk_steps", walk)


def _add_prefix(g: FlowDAG, Fv: Funnel, back: list[int], idx: int, z: int, stats: dict) -> None:
    """Add the walked path from ``z`` forward until it meets ``Fv``.

    ``back[idx]`` is the walked edge leaving ``z``.
    """
    cur = z
    while cur not in Fv:
        e = back[idx]
        _bump(stats, "prefix_steps")
        if Fv.add_edge(g, e):
            _bump(stats, "funnel_edges_added")
        cur = g.heads[e]
        idx -= 1


# -- reporting ---------------------------------------------------------------


def report_maximal(g: FlowDAG, Fu: Funnel, u: int, stats: dict | None = None):
    """Maximal safe paths ending at ``u`` as triplets, plus the pruned funnel.

    Returns ``(solutions, star)``; ``star`` keeps only the edges of the
    reported paths and carries the child pointers needed to expand them.
    """
    stats = stats if stats is not None else {}
    w, tails, f_in = g.weights, g.tails, g.f_in
    estar = g.max_out_edge(u)
    # cost of the canonical right extension; None when u is a sink
    upd_star = None if estar is None else g.f_out[u] - w[estar]

    sol: list[SolutionTriplet] = []
    dropped = 0

    def settle(top: HeapElement, start: int):
        nonlocal dropped
        x = top.excess
        if upd_star is not None and x - upd_star > 0:
            dropped += 1  # extends safely past u: not maximal
        else:
            sol.append(SolutionTriplet(top.edg, start, x))

    order = Fu.reverse_topological(g)
    heaps: dict[int, MergeableHeap] = {}
    conv = {u}
    child: dict[int, int] = {}  # next edge on the single path continuing from a converging vertex
    traversed = promoted = 0
    for y in order:
        ins = Fu.in_adj[y]
        if y == u:
            # u acts as a converging vertex whose empty path has excess f_in(u)
            y_conv, y_val, Hy = True, f_in[u], None
        else:
            Hy = heaps.pop(y, None)
            if not Hy:
                continue
            top = Hy.peek()
            y_conv, y_val = top.converging, top.val
        if not ins:
            if Hy is not None:
                for top in Hy.drain():
                    settle(top, y)
            continue
        fin_y = f_in[y]
        if not y_conv and len(ins) > 1:
            # Several ways in, several ways out. Paths entering y by different
            # edges cannot part after y, so at most one of y's paths crosses
            # any in-edge; the rest start here. The survivor then behaves like
            # a converging-tree path from y on.
            cheapest = fin_y - max(w[e] for e in ins)
            while Hy and Hy.peek().excess - cheapest <= 0:
                settle(Hy.extract_min(), y)
            if len(Hy) != 1:
                raise AssertionError(f"vertex {y} in funnel of {u}: {len(Hy)} paths cross its in-edges")
            top = Hy.extract_min()
            _link_chain(g, Fu, child, top.edg, y)
            y_conv, y_val = True, top.excess
            conv.add(y)
            promoted += 1
        for e in ins:
            traversed += 1
            x = tails[e]
            step = fin_y - w[e]
            if y_conv:
                Hx = heaps.get(x)
                if Hx is None:
                    Hx = heaps[x] = MergeableHeap(stats)
                if len(Fu.out_adj[x]) == 1:
                    Hx.push(HeapElement(e, y_val - step, 0, converging=True))
                    conv.add(x)
                    child[x] = e
                else:
                    Hx.push(HeapElement(e, y_val, step))
            else:
                while Hy and Hy.peek().excess - step <= 0:
                    settle(Hy.extract_min(), y)
                if not Hy:
                    continue
                Hy.lazy_add(step)
                Hx = heaps.get(x)
                if Hx is None:
                    heaps[x] = Hy  # merge into an empty heap is a hand-over
                else:
                    Hx.merge(Hy)
    _bump(stats, "report_sweep", traversed + len(order))
    _bump(stats, "not_right_maximal", dropped)
    _bump(stats, "promoted", promoted)
    star = _materialize_star(g, Fu, sol, order, conv, child)
    return sol, star


def _link_chain(g: FlowDAG, Fu: Funnel, child: dict, edg: int, y: int) -> None:
    """Point ``child`` along the tree path from ``y`` down to edge ``edg``."""
    v = g.tails[edg]
    child[v] = edg
    while v != y:
        ins = Fu.in_adj[v]
        if len(ins) != 1:
            raise DanglingTriplet(f"no unique source path at vertex {v}")
        child[g.tails[ins[0]]] = ins[0]
        v = g.tails[ins[0]]


def _materialize_star(g: FlowDAG, Fu: Funnel, sol, order, conv, child) -> Funnel:
    """Funnel restricted to the edges of the reported paths, in O(|Fu|)."""
    star = Funnel(Fu.root)
    if not sol:
        return star
    tails, heads = g.tails, g.heads
    keep = set()
    # forward: from each characteristic edge along child pointers to the root
    seen = {Fu.root}
    for t in sol:
        keep.add(t.characteristic_edge)
        v = heads[t.characteristic_edge]
        while v not in seen:
            seen.add(v)
            e = child[v]
            keep.add(e)
            v = heads[e]
    # backward: edge (p, c) is needed when some reported path starts at depth
    # <= depth(p) and has its characteristic tail below c
    depth = {}
    for v in reversed(order):
        ins = Fu.in_adj[v]
        depth[v] = depth[tails[ins[0]]] + 1 if len(ins) == 1 else 0
    need = {}
    for t in sol:
        a = tails[t.characteristic_edge]
        d = depth[t.start_vertex]
        if d < need.get(a, d + 1):
            need[a] = d
    for v in order:
        if v in conv or v not in need:
            continue
        ins = Fu.in_adj[v]
        if len(ins) == 1:
            p = tails[ins[0]]
            if need[v] <= depth[p]:
                keep.add(ins[0])
                if need[v] < need.get(p, need[v] + 1):
                    need[p] = need[v]
    for e in sorted(keep):
        star.add_edge(g, e)
    star.child = {v: e for v, e in child.items() if e in keep}
    return star


def expand_solution(g: FlowDAG, F: Funnel, t: SolutionTriplet) -> tuple:
    """Edge sequence of the path encoded by ``t`` inside funnel ``F``."""
    tails, heads = g.tails, g.heads
    ce = t.characteristic_edge
    if ce not in F.edges:
        raise DanglingTriplet(f"edge {ce} not in funnel of {F.root}")
    back = []
    v = tails[ce]
    while v != t.start_vertex:
        ins = F.in_adj.get(v, [])
        if len(ins) != 1:
            raise DanglingTriplet(f"no unique source path at vertex {v}")
        back.append(ins[0])
        v = tails[ins[0]]
    path = back[::-1]
    path.append(ce)
    v = heads[ce]
    while v != F.root:
        e = F.child.get(v)
        if e is None:
            outs = F.out_adj.get(v, [])
            if len(outs) != 1:
                raise DanglingTriplet(f"no unique sink path at vertex {v}")
            e = outs[0]
        path.append(e)
        v = heads[e]
    return tuple(path)


# -- driver ------------------------------------------------------------------


@dataclass
class FunnelResult:
    funnels: list[Funnel]
    solutions: dict[int, list[SolutionTriplet]]
    stars: dict[int, Funnel]
    stats: dict = field(default_factory=dict)

    def maximal_paths(self, g: FlowDAG) -> dict:
        out = {}
        for u, sol in self.solutions.items():
            for t in sol:
                out[expand_solution(g, self.stars[u], t)] = t.excess
        return out

    def triplets(self):
        for u in sorted(self.solutions):
            for t in self.solutions[u]:
                yield u, t


_BUILD_KEYS = ("funnel_edges_added", "build_sweep", "sort_items", "suffix_checks",
               "walk_steps", "prefix_steps")


def enumerate_funnel(g: FlowDAG) -> FunnelResult:
    stats: dict = {}
    funnels = build_funnels(g, stats)
    solutions, stars = {}, {}
    for u in g.topo:
        sol, star = report_maximal(g, funnels[u], u, stats)
        if sol:
            solutions[u] = sol
            stars[u] = star
    stats.setdefault("heap_ops", 0)
    stats.setdefault("heap_steps", 0)
    stats["funnel_size"] = sum(len(f) for f in funnels)
    stats["funnel_ops"] = (
        sum(stats.get(k, 0) for k in _BUILD_KEYS)
        + stats.get("report_sweep", 0) + stats["heap_ops"]
    )
    stats["triplets"] = sum(len(s) for s in solutions.values())
    return FunnelResult(funnels, solutions, stars, stats)
