"""Flow DAG model: construction, validation, topological order and the text
edge-list format shared by every command."""

from __future__ import annotations

import heapq
import io
from fractions import Fraction
from typing import Iterable, Sequence, TextIO, Union

Weight = Union[int, Fraction]
Path = tuple  # tuple of edge ids


class FlowError(ValueError):
    """Base class for invalid graph or path input."""


class CycleError(FlowError):
    pass


class ConservationError(FlowError):
    def __init__(self, v: int, f_in: Weight, f_out: Weight):
        super().__init__(
            f"vertex {v} violates flow conservation: in={fmt(f_in)} out={fmt(f_out)}"
        )
        self.v, self.f_in, self.f_out = v, f_in, f_out


class NonPositiveWeightError(FlowError):
    def __init__(self, edge: int, weight: Weight):
        super().__init__(f"edge {edge} has non-positive weight {fmt(weight)}")
        self.edge, self.weight = edge, weight


class InvalidPath(FlowError):
    pass


class ParseError(FlowError):
    pass


def exact(value) -> Weight:
    """Convert an int, Fraction or decimal literal to an exact number.

    Integral values come back as ``int`` so that the common integer case
    stays on fast native arithmetic.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a weight")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        # floats are taken at their decimal repr, not their binary value
        value = repr(value)
    q = Fraction(value)
    return q.numerator if q.denominator == 1 else q


def fmt(value: Weight) -> str:
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


class FlowDAG:
    """Immutable edge-weighted DAG satisfying flow conservation.

    Edges are identified by their index in the input list; parallel edges
    are allowed. Build instances with :func:`build`.
    """

    __slots__ = (
        "n", "tails", "heads", "weights", "out_edges", "in_edges",
        "f_in", "f_out", "topo", "topo_index",
    )

    def __init__(self, n, tails, heads, weights, out_edges, in_edges, f_in, f_out, topo):
        self.n = n
        self.tails = tails
        self.heads = heads
        self.weights = weights
        self.out_edges = out_edges
        self.in_edges = in_edges
        self.f_in = f_in
        self.f_out = f_out
        self.topo = topo
        self.topo_index = tuple(_positions(topo))

    @property
    def m(self) -> int:
        return len(self.tails)

    def edge(self, e: int) -> tuple[int, int, Weight]:
        return self.tails[e], self.heads[e], self.weights[e]

    def edges(self) -> Iterable[tuple[int, int, Weight]]:
        return zip(self.tails, self.heads, self.weights)

    @property
    def sources(self) -> list[int]:
        return [v for v in range(self.n) if self.f_in[v] == 0]

    @property
    def sinks(self) -> list[int]:
        return [v for v in range(self.n) if self.f_out[v] == 0]

    def flow_value(self) -> Weight:
        return sum((self.f_out[v] for v in self.sources), 0)

    def max_out_edge(self, u: int) -> int | None:
        """Heaviest out-edge of ``u``; ties go to the smallest edge id."""
        best = None
        for e in self.out_edges[u]:
            if best is None or self.weights[e] > self.weights[best]:
                best = e
        return best

    def max_in_edge(self, v: int) -> int | None:
        best = None
        for e in self.in_edges[v]:
            if best is None or self.weights[e] > self.weights[best]:
                best = e
        return best

    # -- paths -----------------------------------------------------------

    def check_path(self, p: Sequence[int]) -> None:
        if len(p) == 0:
            raise InvalidPath("path must contain at least one edge")
        seen = set()
        prev_head = None
        for e in p:
            if not (isinstance(e, int) and 0 <= e < self.m):
                raise InvalidPath(f"unknown edge id {e!r}")
            t = self.tails[e]
            if prev_head is not None and t != prev_head:
                raise InvalidPath(f"edge {e} does not continue the path at vertex {prev_head}")
            if t in seen:
                raise InvalidPath(f"vertex {t} repeats")
            seen.add(t)
            prev_head = self.heads[e]
        if prev_head in seen:
            raise InvalidPath(f"vertex {prev_head} repeats")

    def path_vertices(self, p: Sequence[int]) -> list[int]:
        if not p:
            return []
        return [self.tails[p[0]]] + [self.heads[e] for e in p]

    def path_from_vertices(self, vertices: Sequence[int]) -> Path:
        """Resolve a vertex sequence into edge ids.

        Raises InvalidPath when a hop is missing or ambiguous because of
        parallel edges.
        """
        if len(vertices) < 2:
            raise InvalidPath("a path needs at least two vertices")
        edges = []
        for a, b in zip(vertices, vertices[1:]):
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise InvalidPath(f"vertex out of range in hop {a}->{b}")
            hits = [e for e in self.out_edges[a] if self.heads[e] == b]
            if not hits:
                raise InvalidPath(f"no edge {a}->{b}")
            if len(hits) > 1:
                raise InvalidPath(f"parallel edges {a}->{b}; pass edge ids instead")
            edges.append(hits[0])
        p = tuple(edges)
        self.check_path(p)
        return p

    def __repr__(self) -> str:
        return f"FlowDAG(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FlowDAG):
            return NotImplemented
        return (self.n, self.tails, self.heads, self.weights) == (
            other.n, other.tails, other.heads, other.weights)

    __hash__ = None


def _positions(order):
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    return pos


def build(edge_triples: Iterable[tuple[int, int, object]], n: int | None = None) -> FlowDAG:
    """Validate ``(tail, head, weight)`` triples and return a FlowDAG.

    ``n`` defaults to one more than the largest vertex id seen; pass it
    explicitly to keep trailing isolated vertices.
    """
    tails, heads, weights = [], [], []
    for e, (t, h, w) in enumerate(edge_triples):
        w = exact(w)
        if w <= 0:
            raise NonPositiveWeightError(e, w)
        if t < 0 or h < 0:
            raise FlowError(f"edge {e} has a negative vertex id")
        tails.append(int(t))
        heads.append(int(h))
        weights.append(w)
    top = max(tails + heads, default=-1) + 1
    if n is None:
        n = top
    elif top > n:
        raise FlowError(f"vertex id {top - 1} out of range for n={n}")

    out_edges = [[] for _ in range(n)]
    in_edges = [[] for _ in range(n)]
    f_in = [0] * n
    f_out = [0] * n
    for e in range(len(tails)):
        t, h, w = tails[e], heads[e], weights[e]
        if t == h:
            raise CycleError(f"self-loop at vertex {t}")
        out_edges[t].append(e)
        in_edges[h].append(e)
        f_out[t] += w
        f_in[h] += w
    for v in range(n):
        if f_in[v] and f_out[v] and f_in[v] != f_out[v]:
            raise ConservationError(v, f_in[v], f_out[v])

    topo = _kahn(n, tails, heads, out_edges, in_edges)
    return FlowDAG(
        n, tuple(tails), tuple(heads), tuple(weights),
        tuple(map(tuple, out_edges)), tuple(map(tuple, in_edges)),
        tuple(f_in), tuple(f_out), tuple(topo),
    )


def _kahn(n, tails, heads, out_edges, in_edges) -> list[int]:
    indeg = [len(in_edges[v]) for v in range(n)]
    ready = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for e in out_edges[v]:
            h = heads[e]
            indeg[h] -= 1
            if indeg[h] == 0:
                heapq.heappush(ready, h)
    if len(order) != n:
        stuck = min(v for v in range(n) if indeg[v] > 0)
        raise CycleError(f"graph has a cycle through vertex {stuck}")
    return order


def topological_order(g: FlowDAG) -> list[int]:
    """Topological order, smallest vertex id first among ready vertices."""
    return list(g.topo)


# -- text format -----------------------------------------------------------


def parse(text: Union[str, TextIO]) -> FlowDAG:
    """Read the ``n m`` header + ``tail head weight`` edge-list format."""
    stream = io.StringIO(text) if isinstance(text, str) else text
    rows = []
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty graph file")
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError(f"line {lineno}: expected header 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"line {lineno}: header must be two integers") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative size in header")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    triples = []
    for lineno, parts in body:
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'tail head weight'")
        try:
            t, h = int(parts[0]), int(parts[1])
            w = exact(parts[2])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"line {lineno}: malformed edge {' '.join(parts)!r}") from None
        if not (0 <= t < n and 0 <= h < n):
            raise ParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        triples.append((t, h, w))
    return build(triples, n=n)


def dumps(g: FlowDAG) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{t} {h} {fmt(w)}" for t, h, w in g.edges())
    return "\n".join(lines) + "\n"


def read(path: str) -> FlowDAG:
    if path == "-":
        import sys
        return parse(sys.stdin)
    with open(path) as fh:
        return parse(fh)
