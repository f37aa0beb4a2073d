"""Leftist min-heap with O(1) lazy bulk updates.

Elements carry ``(edg, val, upd)`` and are ordered by ``val - upd``; a
bulk ``lazy_add(d)`` raises ``upd`` of every element by ``d`` and is pushed
down to children only when a node is touched.
"""

from __future__ import annotations


class ExtractFromEmpty(IndexError):
    pass


class HeapElement:
    __slots__ = ("edg", "val", "upd", "converging")

    def __init__(self, edg, val, upd=0, converging=False):
        self.edg = edg
        self.val = val
        self.upd = upd
        # explicit tag instead of a negative sentinel in ``upd``
        self.converging = converging

    @property
    def excess(self):
        return self.val - self.upd

    def __repr__(self):
        tag = ", conv" if self.converging else ""
        return f"HeapElement({self.edg}, {self.val}, {self.upd}{tag})"


class _Node:
    __slots__ = ("item", "left", "right", "rank", "lazy")

    def __init__(self, item):
        self.item = item
        self.left = None
        self.right = None
        self.rank = 1
        self.lazy = 0

    def push_down(self):
        if self.lazy:
            for c in (self.left, self.right):
                if c is not None:
                    c.item.upd += self.lazy
                    c.lazy += self.lazy
            self.lazy = 0


def _key(node):
    it = node.item
    return (it.val - it.upd, it.edg)


class MergeableHeap:
    __slots__ = ("_root", "_size", "stats")

    def __init__(self, stats: dict | None = None):
        self._root = None
        self._size = 0
        # shared counter dict: "heap_ops" per API call, "heap_steps" per node merge
        self.stats = stats if stats is not None else {}

    def __len__(self):
        return self._size

    def __bool__(self):
        return self._size > 0

    def _count(self, key, k=1):
        self.stats[key] = self.stats.get(key, 0) + k

    def _merge(self, a, b):
        # iterative right-spine merge; returns new root
        if a is None:
            return b
        if b is None:
            return a
        spine = []
        while a is not None and b is not None:
            self._count("heap_steps")
            if _key(b) < _key(a):
                a, b = b, a
            a.push_down()
            spine.append(a)
            a, b = a.right, b
        rest = a if a is not None else b
        for node in reversed(spine):
            node.right = rest
            l, r = node.left, node.right
            if l is None or (r is not None and l.rank < r.rank):
                node.left, node.right = r, l
            node.rank = (node.right.rank + 1) if node.right is not None else 1
            rest = node
        return rest

    def push(self, item: HeapElement) -> None:
        self._count("heap_ops")
        self._root = self._merge(self._root, _Node(item))
        self._size += 1

    def peek(self) -> HeapElement:
        if self._root is None:
            raise ExtractFromEmpty("peek on empty heap")
        return self._root.item

    def extract_min(self) -> HeapElement:
        if self._root is None:
            raise ExtractFromEmpty("extract_min on empty heap")
        self._count("heap_ops")
        root = self._root
        root.push_down()
        self._root = self._merge(root.left, root.right)
        self._size -= 1
        return root.item

    def merge(self, other: "MergeableHeap") -> None:
        """Move every element of ``other`` into this heap."""
        if other is self or other._root is None:
            return
        self._count("heap_ops")
        self._root = self._merge(self._root, other._root)
        self._size += other._size
        other._root = None
        other._size = 0

    def lazy_add(self, delta) -> None:
        """Add ``delta`` to ``upd`` of every element in O(1)."""
        if self._root is None or not delta:
            return
        self._count("heap_ops")
        self._root.item.upd += delta
        self._root.lazy += delta

    def drain(self):
        while self._root is not None:
            yield self.extract_min()


def make(stats: dict | None = None) -> MergeableHeap:
    return MergeableHeap(stats)
