import pytest
from hypothesis import given, strategies as st

from oracles import geometric_rim_hooks
from snchar.partitions import enumerate_partitions, hook_number_11
from snchar.sequence import (
    RimHookRef,
    find_rim_hooks,
    from_sequence,
    is_essential,
    normalize,
    remove_rim_hook,
    render_sequence,
    to_sequence,
)

LAM = (5, 4, 2, 1)
SEQ = (1, 0, 1, 0, 1, 1, 0, 1, 0)


def test_to_sequence_examples():
    assert to_sequence(LAM) == SEQ
    assert to_sequence(()) == ()
    assert to_sequence((3, 2, 2, 1)) == (1, 0, 1, 0, 0, 1, 0)


def test_from_sequence_examples():
    assert from_sequence(SEQ) == LAM
    assert from_sequence(()) == ()
    assert from_sequence((1, 0)) == (1,)


@pytest.mark.parametrize("word", [(0, 1, 0), (1, 0, 1), (1, 2, 0)])
def test_from_sequence_rejects_malformed(word):
    with pytest.raises(ValueError):
        from_sequence(word)


def test_normalize_examples():
    assert normalize((0, 1, 0)) == (1, 0)
    assert normalize((1, 0, 1, 1)) == (1, 0)
    assert normalize((0, 0, 1, 0, 1, 1)) == (1, 0)
    assert from_sequence(normalize((0, 0, 1, 0, 1, 1))) == (1,)


@given(st.lists(st.integers(0, 1), max_size=20))
def test_normalize_idempotent(word):
    once = normalize(word)
    assert normalize(once) == once
    assert is_essential(once)


def test_roundtrip_partitions():
    for n in range(26):
        for lam in enumerate_partitions(n):
            s = to_sequence(lam)
            assert from_sequence(s) == lam
            if lam:
                assert len(s) == hook_number_11(lam) + 1
                assert s.count(0) == len(lam)


@given(st.lists(st.integers(0, 1), max_size=20))
def test_roundtrip_words(word):
    word = tuple(word)
    if is_essential(word):
        assert to_sequence(from_sequence(word)) == word


def test_find_rim_hooks_worked_example():
    hooks = find_rim_hooks(SEQ, 4)
    assert len(hooks) == 2
    assert all(leg == 1 for _, leg in hooks)
    children = {from_sequence(remove_rim_hook(SEQ, h)) for h, _ in hooks}
    assert children == {(5, 1, 1, 1), (3, 2, 2, 1)}


def test_length_six_hook():
    # the marked pair sits at 1-based positions 3 and 9 of the essential word
    hook = RimHookRef(2, 8)
    assert (hook, 2) in find_rim_hooks(SEQ, 6)
    assert hook.length == 6
    removed = remove_rim_hook(SEQ, hook)
    assert removed == normalize((1, 0, 0, 0, 1, 1, 0, 1, 1))
    assert from_sequence(removed) == (3, 1, 1, 1)


def test_distance_four_removal():
    hook = next(h for h, _ in find_rim_hooks(SEQ, 4) if h.left == 4)
    assert remove_rim_hook(SEQ, hook) == to_sequence((3, 2, 2, 1))


def test_hook_longer_than_weight():
    for lam in enumerate_partitions(6):
        assert find_rim_hooks(to_sequence(lam), 7) == []


def test_remove_rejects_non_hook():
    with pytest.raises(ValueError):
        remove_rim_hook(SEQ, RimHookRef(1, 5))
    with pytest.raises(ValueError):
        find_rim_hooks(SEQ, 0)


def test_removal_conserves_weight():
    for n in range(1, 10):
        for lam in enumerate_partitions(n):
            s = to_sequence(lam)
            for length in range(1, n + 1):
                for h, _ in find_rim_hooks(s, length):
                    assert sum(from_sequence(remove_rim_hook(s, h))) == n - length


def test_render():
    assert render_sequence(SEQ) == "... 0 0 | 1 0 1 0 1 1 0 1 0 | 1 1 ..."
    assert render_sequence(()) == "... 0 0 | | 1 1 ..."


def test_bijection_small():
    # the exhaustive n <= 12 run is in the acceptance suite
    for n in range(1, 8):
        for lam in enumerate_partitions(n):
            s = to_sequence(lam)
            for length in range(1, n + 1):
                seq_side = {(from_sequence(remove_rim_hook(s, h)), leg)
                            for h, leg in find_rim_hooks(s, length)}
                assert seq_side == geometric_rim_hooks(lam, length)
