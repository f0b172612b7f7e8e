"""Character values by the Murnaghan-Nakayama rule on partition sequences."""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from math import comb

from .partitions import Partition
from .sequence import normalize, to_sequence


@dataclass(frozen=True)
class InstrumentedResult:
    value: int
    invocations: int


def _check_weights(lam: Sequence[int], mu: Sequence[int]) -> tuple[Partition, Partition]:
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise ValueError(f"weights differ: |{lam}| = {lam.weight}, |{mu}| = {mu.weight}")
    return lam, mu


def scan_pairs(word: Sequence[int], length: int) -> Iterator[tuple[int, int]]:
    """Yield ``(i, sign)`` for every rim hook ``(word[i], word[i+length])``.

    The sign is kept as a running parity of the zeros strictly inside the
    window, updated in O(1) per step the way the textbook loop does it:
    prime with ``word[0:length-1]``, then at step ``i`` drop ``word[i]`` and
    add ``word[i+length-1]`` (they change the parity only when they differ).
    """
    s = len(word)
    if length >= s:
        # no pair fits, and the priming loop would read past the word
        return
    sign = 1
    for j in range(length - 1):
        if word[j] == 0:
            sign = -sign
    for i in range(s - length):
        if word[i] != word[i + length - 1]:
            sign = -sign
        if word[i] == 1 and word[i + length] == 0:
            yield i, sign


def _mn_recursion(lam: Partition, mu: Partition, memoize: bool) -> InstrumentedResult:
    word = list(to_sequence(lam))
    k = len(mu)
    table: dict[tuple[int, ...], int] = {}
    calls = 0

    def inner(t: int) -> int:
        nonlocal calls
        calls += 1
        if t >= k:
            return 1
        length = mu[t]
        chi = 0
        # the exchange is undone before the scan resumes
        for i, sign in scan_pairs(word, length):
            j = i + length
            word[i], word[j] = 0, 1
            if memoize:
                key = normalize(word)
                if key not in table:
                    table[key] = inner(t + 1)
                chi += sign * table[key]
            else:
                chi += sign * inner(t + 1)
            word[i], word[j] = 1, 0
        return chi

    value = inner(0)
    return InstrumentedResult(value, calls)


def mn_char_instrumented(lam: Sequence[int], mu: Sequence[int]) -> InstrumentedResult:
    """Memoized evaluation; ``invocations`` counts distinct recursion nodes including the empty shape."""
    lam, mu = _check_weights(lam, mu)
    return _mn_recursion(lam, mu, memoize=True)


def mn_char(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Irreducible character value of S_n at shape ``lam`` and cycle type ``mu``.

    >>> mn_char((5, 4, 2, 1), (4, 3, 2, 2, 1))
    0
    """
    return mn_char_instrumented(lam, mu).value


def mn_char_plain(lam: Sequence[int], mu: Sequence[int]) -> InstrumentedResult:
    """Same recursion without the memo table; repeated subproblems are recomputed."""
    lam, mu = _check_weights(lam, mu)
    return _mn_recursion(lam, mu, memoize=False)


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[-1][-1]


def r_lambda_determinant(lam: Sequence[int]) -> int:
    """Number of partitions whose diagram fits inside ``lam``, as det C(lam_i + 1, 1 + i - j)."""
    m = len(lam)
    matrix = [[_binom(lam[i] + 1, 1 + i - j) for j in range(m)] for i in range(m)]
    return bareiss_determinant(matrix)
