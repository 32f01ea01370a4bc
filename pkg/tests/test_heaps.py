import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphknn.heaps import (
    DECREASED,
    EVICTED,
    INSERTED,
    REJECTED,
    AddressableHeap,
    BoundedQueue,
    LazyHeap,
)

ops = st.lists(
    st.one_of(
        st.tuples(st.just("offer"), st.integers(0, 9), st.integers(0, 20)),
        st.tuples(st.just("pop")),
    ),
    max_size=60,
)


def _check_against_model(queue, operations, capacity=None):
    model: dict[int, tuple[float, int]] = {}
    for op in operations:
        if op[0] == "offer":
            _, item, d = op
            key = (float(d), item)
            outcome = queue.offer(item, key)
            if item in model:
                if key < model[item]:
                    assert outcome == DECREASED
                    model[item] = key
                else:
                    assert outcome == REJECTED
            elif capacity is not None and len(model) == capacity and not key < max(model.values()):
                assert outcome == REJECTED
            else:
                model[item] = key
                if capacity is not None and len(model) > capacity:
                    worst = max(model.values())
                    del model[worst[1]]
                    assert outcome == EVICTED
                else:
                    assert outcome == INSERTED
        elif model:
            best = min(model.values())
            assert queue.pop() == (best[1], best)
            del model[best[1]]
        assert len(queue) == len(model)
        if model:
            assert queue.min_key() == min(model.values())
        for item, key in model.items():
            assert item in queue
            assert queue.key_of(item) == key


@pytest.mark.parametrize("cls", [AddressableHeap, LazyHeap])
@given(operations=ops)
def test_unbounded_queues_match_model(cls, operations):
    _check_against_model(cls(), operations)


@given(operations=ops, capacity=st.integers(1, 5))
def test_bounded_queue_matches_model(operations, capacity):
    _check_against_model(BoundedQueue(capacity), operations, capacity)


@pytest.mark.parametrize("cls", [AddressableHeap, LazyHeap])
def test_decrease_key_contract(cls):
    q = cls()
    q.insert(7, (12.0, 7))
    q.decrease_key(7, (9.0, 7))
    assert q.key_of(7) == (9.0, 7)
    with pytest.raises(ValueError):
        q.decrease_key(7, (10.0, 7))
    with pytest.raises(KeyError):
        q.insert(7, (1.0, 7))


def test_bounded_queue_rejects_beyond_kth():
    q = BoundedQueue(2)
    q.insert(1, (1.0, 1))
    q.insert(2, (2.0, 2))
    assert not q.accepts((2.0, 3))
    assert q.accepts((1.5, 3))
    assert q.insert(3, (1.5, 3)) == (2.0, 2)
    assert 2 not in q
    assert [q.pop()[0], q.pop()[0]] == [1, 3]


def test_addressable_heap_with_vertex_items():
    q = AddressableHeap()
    for v, key in [(3, (5.0, 1, 3)), (1, (5.0, 0, 1)), (2, (4.0, 9, 2))]:
        q.insert(v, key)
    q.decrease_key(3, (1.0, 1, 3))
    assert [q.pop()[0] for _ in range(3)] == [3, 2, 1]
    assert not q
