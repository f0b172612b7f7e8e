"""Partition sequences: the 0/1 border walk of a Young diagram.

Walking the border of the diagram from the south-west to the north-east, a
vertical step is written ``0`` and a horizontal step ``1``.  Only the
essential part (first ``1`` to last ``0``) is stored; it is implicitly
preceded by infinitely many ``0`` and followed by infinitely many ``1``.

A rim hook of length ``L`` is a ``1`` followed ``L`` places later by a ``0``;
its leg length is the number of ``0`` strictly between them, and removing it
means exchanging the two digits.

Indices are 0-based here; the recursion in :mod:`snchar.murnaghan_nakayama`
documents the 1-based convention of the textbook pseudocode.
"""
from __future__ import annotations

from collections.abc import Sequence
from typing import NamedTuple

from .partitions import Partition

PartitionSequence = tuple[int, ...]


class RimHookRef(NamedTuple):
    left: int
    right: int

    @property
    def length(self) -> int:
        return self.right - self.left


def to_sequence(lam: Sequence[int]) -> PartitionSequence:
    """Essential border word of ``lam``, built from the last row upwards."""
    out: list[int] = []
    m = len(lam)
    for i in range(m - 1, -1, -1):
        nxt = lam[i + 1] if i + 1 < m else 0
        out.extend([1] * (lam[i] - nxt))
        out.append(0)
    return tuple(out)


def is_essential(word: Sequence[int]) -> bool:
    if any(d not in (0, 1) for d in word):
        return False
    return not word or (word[0] == 1 and word[-1] == 0)


def from_sequence(word: Sequence[int]) -> Partition:
    if not is_essential(word):
        raise ValueError(f"not an essential partition sequence: {render_sequence(word)}")
    rows = []
    ones = 0
    for d in word:
        if d:
            ones += 1
        else:
            rows.append(ones)
    return Partition._trusted(reversed(rows))


def normalize(word: Sequence[int]) -> PartitionSequence:
    """Strip leading 0s and trailing 1s."""
    lo, hi = 0, len(word)
    while lo < hi and word[lo] == 0:
        lo += 1
    while hi > lo and word[hi - 1] == 1:
        hi -= 1
    return tuple(word[lo:hi])


def find_rim_hooks(word: Sequence[int], length: int) -> list[tuple[RimHookRef, int]]:
    """All rim hooks of the given length, each paired with its leg length."""
    if length < 1:
        raise ValueError("hook length must be positive")
    hooks = []
    for i in range(len(word) - length):
        if word[i] == 1 and word[i + length] == 0:
            leg = sum(1 for d in word[i + 1:i + length] if d == 0)
            hooks.append((RimHookRef(i, i + length), leg))
    return hooks


def remove_rim_hook(word: Sequence[int], hook: RimHookRef) -> PartitionSequence:
    i, j = hook
    if not (0 <= i < j < len(word)) or word[i] != 1 or word[j] != 0:
        raise ValueError(f"{hook} is not a rim hook of {render_sequence(word)}")
    out = list(word)
    out[i], out[j] = 0, 1
    return normalize(out)


def render_sequence(word: Sequence[int], pad: int = 2) -> str:
    """Space-separated bits with the essential part set off by bars.

    >>> render_sequence((1, 0))
    '... 0 0 | 1 0 | 1 1 ...'
    """
    head = " ".join(["0"] * pad)
    tail = " ".join(["1"] * pad)
    body = " ".join(map(str, word))
    return f"... {head} | {body} | {tail} ..." if body else f"... {head} | | {tail} ..."
