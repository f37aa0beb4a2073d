import random

import pytest
from hypothesis import given, strategies as st

from safeflow.heap import ExtractFromEmpty, HeapElement, MergeableHeap


def test_empty():
    h = MergeableHeap()
    assert not h and len(h) == 0
    with pytest.raises(ExtractFromEmpty):
        h.extract_min()
    with pytest.raises(ExtractFromEmpty):
        h.peek()


def test_orders_by_effective_value():
    h = MergeableHeap()
    for edg, val, upd in [(0, 5, 0), (1, 9, 6), (2, 4, 0)]:
        h.push(HeapElement(edg, val, upd))
    assert [x.edg for x in h.drain()] == [1, 2, 0]


def test_lazy_add_reaches_every_element():
    h = MergeableHeap()
    for i in range(10):
        h.push(HeapElement(i, i))
    h.lazy_add(3)
    out = list(h.drain())
    assert [x.excess for x in out] == [i - 3 for i in range(10)]
    assert all(x.upd == 3 for x in out)


def test_merge_keeps_pending_updates():
    a, b = MergeableHeap(), MergeableHeap()
    for i in range(4):
        a.push(HeapElement(i, 10 + i))
        b.push(HeapElement(10 + i, 20 + i))
    a.lazy_add(1)
    b.lazy_add(15)
    a.merge(b)
    assert len(a) == 8 and len(b) == 0
    got = [(x.edg, x.excess) for x in a.drain()]
    want = sorted([(i, 9 + i) for i in range(4)] + [(10 + i, 5 + i) for i in range(4)],
                  key=lambda t: (t[1], t[0]))
    assert got == want


def test_ties_broken_by_edge():
    h = MergeableHeap()
    for e in (5, 2, 7):
        h.push(HeapElement(e, 1))
    assert [x.edg for x in h.drain()] == [2, 5, 7]


def test_counters():
    stats = {}
    h = MergeableHeap(stats)
    h.push(HeapElement(0, 1))
    h.push(HeapElement(1, 2))
    h.lazy_add(1)
    h.extract_min()
    assert stats["heap_ops"] == 4


ops = st.lists(st.tuples(st.sampled_from("pxlm"), st.integers(-5, 20)), max_size=80)


@given(ops, st.integers(0, 10**6))
def test_against_sorted_list(script, seed):
    """Two heaps driven by random ops stay equal to a plain list model."""
    rng = random.Random(seed)
    heaps = [MergeableHeap(), MergeableHeap()]
    model = [[], []]
    edg = 0
    for op, val in script:
        i = rng.randrange(2)
        if op == "p":
            heaps[i].push(HeapElement(edg, val))
            model[i].append([val, 0, edg])
            edg += 1
        elif op == "x" and model[i]:
            model[i].sort(key=lambda t: (t[0] - t[1], t[2]))
            v, u, e = model[i].pop(0)
            got = heaps[i].extract_min()
            assert (got.edg, got.excess) == (e, v - u)
        elif op == "l":
            heaps[i].lazy_add(val)
            for t in model[i]:
                t[1] += val
        elif op == "m":
            heaps[i].merge(heaps[1 - i])
            model[i] += model[1 - i]
            model[1 - i] = []
        assert len(heaps[i]) == len(model[i])
    for i in range(2):
        want = sorted(((v - u, e) for v, u, e in model[i]))
        assert [(x.excess, x.edg) for x in heaps[i].drain()] == want
