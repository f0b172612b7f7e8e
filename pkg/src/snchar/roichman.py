"""Character values by Roichman's descent rule over standard tableaux.

At ``q = 1`` the rule reads

    chi^lam(mu) = sum over standard T of shape lam of prod_{1 <= i < n} f(T, i)

where, with ``B`` the partial sums of ``mu`` and ``D(T)`` the descent set,

    f(T, i) = -1  if i not in B and i in D(T)
               0  if i, i+1 not in B, i not in D(T), i+1 in D(T)
               q  otherwise.

``f(T, i)`` only looks at where ``i``, ``i+1`` and ``i+2`` sit, so the sum can
be grown one entry at a time, pruning a prefix as soon as a factor is zero.
The pruned recursion only ever needs the prefix shape, the row of the largest
entry and whether the entry before it was a descent.
"""
from __future__ import annotations

import sys
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .murnaghan_nakayama import InstrumentedResult, _check_weights
from .partitions import BorderIndicator, Partition, border_set, degree

StandardTableau = tuple[tuple[int, ...], ...]


def format_tableau(tableau: StandardTableau) -> str:
    """``((1, 2, 4), (3,))`` -> ``"1,2,4/3"``."""
    return "/".join(",".join(map(str, row)) for row in tableau)


def parse_tableau(text: str) -> StandardTableau:
    text = text.strip()
    if not text:
        return ()
    return tuple(tuple(int(x) for x in row.split(",")) for row in text.split("/"))


def tableau_shape(tableau: StandardTableau) -> Partition:
    return Partition(len(row) for row in tableau)


def is_standard(tableau: StandardTableau) -> bool:
    entries = sorted(x for row in tableau for x in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    lengths = [len(row) for row in tableau]
    if any(b > a for a, b in zip(lengths, lengths[1:])) or 0 in lengths:
        return False
    for row in tableau:
        if any(b <= a for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(tableau, tableau[1:]):
        if any(lower[c] <= upper[c] for c in range(len(lower))):
            return False
    return True


def _positions(tableau: StandardTableau) -> dict[int, tuple[int, int]]:
    return {x: (r, c) for r, row in enumerate(tableau) for c, x in enumerate(row)}


def descent_set(tableau: StandardTableau) -> set[int]:
    """Entries ``i`` such that ``i+1`` lies strictly below and weakly left of ``i``."""
    pos = _positions(tableau)
    out = set()
    for i in range(1, len(pos)):
        (r0, c0), (r1, c1) = pos[i], pos[i + 1]
        if r1 > r0 and c1 <= c0:
            out.add(i)
    return out


def f1(i: int, border: BorderIndicator, i_in_d: bool, i1_in_d: bool) -> int:
    """The factor ``f(T, i)`` at ``q = 1``; cases are tested in the order -1, 0, 1."""
    if i not in border and i_in_d:
        return -1
    if i not in border and i + 1 not in border and not i_in_d and i1_in_d:
        return 0
    return 1


def _fq(i: int, border: BorderIndicator, i_in_d: bool, i1_in_d: bool) -> tuple[int, int]:
    # factor as (coefficient, power of q)
    if i not in border and i_in_d:
        return -1, 0
    if i not in border and i + 1 not in border and not i_in_d and i1_in_d:
        return 0, 0
    return 1, 1


def iter_standard_tableaux(lam: Sequence[int]) -> Iterator[StandardTableau]:
    """Yield every standard tableau of shape ``lam``.

    Entries are placed in increasing order; at each step rows are tried top
    to bottom, which fixes the output order.
    """
    lam = tuple(lam)
    n = sum(lam)
    rows: list[list[int]] = [[] for _ in lam]

    def rec(j: int) -> Iterator[StandardTableau]:
        if j > n:
            yield tuple(tuple(r) for r in rows)
            return
        for k in range(len(lam)):
            if len(rows[k]) < lam[k] and (k == 0 or len(rows[k]) < len(rows[k - 1])):
                rows[k].append(j)
                yield from rec(j + 1)
                rows[k].pop()

    yield from rec(1)


def enumerate_standard_tableaux(lam: Sequence[int]) -> list[StandardTableau]:
    return list(iter_standard_tableaux(lam))


def d_lambda(lam: Sequence[int]) -> int:
    """Number of standard tableaux of shape ``lam`` (hook length formula)."""
    return degree(Partition(lam))


def tableau_factors(tableau: StandardTableau, mu: Sequence[int]) -> list[int]:
    """``[f(T, 1), ..., f(T, n-1)]`` at ``q = 1``."""
    border = border_set(mu)
    desc = descent_set(tableau)
    n = border.n
    return [f1(i, border, i in desc, i + 1 in desc) for i in range(1, n)]


def roi_char_naive(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Sum of factor products over all standard tableaux, without pruning."""
    lam, mu = _check_weights(lam, mu)
    total = 0
    for tableau in iter_standard_tableaux(lam):
        product = 1
        for f in tableau_factors(tableau, mu):
            product *= f
        total += product
    return total


def _ensure_recursion(depth: int) -> None:
    if sys.getrecursionlimit() < depth + 200:
        sys.setrecursionlimit(depth + 200)


def roi_char_instrumented(lam: Sequence[int], mu: Sequence[int]) -> InstrumentedResult:
    """Pruned prefix recursion; ``invocations`` counts every call, leaves included.

    A call handles all prefixes with shape ``alpha`` (``j = |alpha|``), largest
    entry ``j`` on row ``m``, and ``d`` telling whether ``j - 1`` is a descent.
    Adding ``j + 1`` on row ``k`` makes ``j`` a descent iff ``k > m``; that
    placement completes the factor ``f(., j - 1)``, and a zero factor prunes
    the branch before the call.
    """
    lam, mu = _check_weights(lam, mu)
    n = lam.weight
    bits = border_set(mu).as_bits()
    # n is always a partial sum, so the 0 case never fires at the last factor
    assert n == 0 or bits[n] == 1
    rows = list(lam)
    ell = len(rows)
    alpha = [0] * ell
    calls = 0
    _ensure_recursion(n)

    def inner(j: int, m: int, d: bool) -> int:
        nonlocal calls
        calls += 1
        if j == n:
            return -1 if d and not bits[n - 1] else 1
        if j < 2 or bits[j - 1]:
            g_new_descent = g_flat = 1
        elif d:
            g_new_descent = g_flat = -1
        else:
            g_new_descent = 1 if bits[j] else 0
            g_flat = 1
        total = 0
        prev = None
        for k in range(ell):
            a = alpha[k]
            if a < rows[k] and (prev is None or a < prev):
                if k > m:
                    g = g_new_descent
                    if g:
                        alpha[k] = a + 1
                        total += g * inner(j + 1, k, True)
                        alpha[k] = a
                else:
                    alpha[k] = a + 1
                    total += g_flat * inner(j + 1, k, False)
                    alpha[k] = a
            if a == 0:
                break
            prev = a
        return total

    value = inner(0, 0, False)
    return InstrumentedResult(value, calls)


def roi_char(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Character value by the pruned Roichman recursion.

    >>> roi_char((2, 1, 1), (3, 1))
    0
    """
    return roi_char_instrumented(lam, mu).value


def roi_invocation_count(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of calls :func:`roi_char_instrumented` makes, without making them.

    The subtree below a call depends only on ``(alpha, m, d)``, so subtree
    sizes are memoized on that state.  Used for family-wide scans where
    running the recursion itself would take millions of calls per shape.
    """
    lam, mu = _check_weights(lam, mu)
    n = lam.weight
    bits = border_set(mu).as_bits()
    rows = tuple(lam)
    ell = len(rows)
    _ensure_recursion(n)

    @lru_cache(maxsize=None)
    def size(alpha: tuple[int, ...], j: int, m: int, d: bool) -> int:
        if j == n:
            return 1
        zero_on_descent = not (j < 2 or bits[j - 1]) and not d and not bits[j]
        count = 1
        for k in range(ell):
            a = alpha[k]
            if a < rows[k] and (k == 0 or a < alpha[k - 1]):
                if k > m and zero_on_descent:
                    continue
                child = alpha[:k] + (a + 1,) + alpha[k + 1:]
                count += size(child, j + 1, k, k > m)
            if a == 0:
                break
        return count

    return size((0,) * ell, 0, 0, False)


@dataclass(frozen=True)
class QPolynomial:
    """Integer polynomial in ``q``; ``coeffs[e]`` is the coefficient of ``q**e``."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * q + c
        return value

    def __str__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((c < 0, body))
        if not terms:
            return "0"
        neg, body = terms[0]
        out = ("-" if neg else "") + body
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out


def hecke_char_poly(lam: Sequence[int], mu: Sequence[int]) -> QPolynomial:
    """Hecke algebra character at ``T_mu`` as a polynomial in ``q``.

    Only indices ``i`` outside the partial sums of ``mu`` contribute a factor;
    each surviving tableau adds ``+-q**e`` with ``e`` the number of factors
    that took the ``q`` case.
    """
    lam, mu = _check_weights(lam, mu)
    n = lam.weight
    border = border_set(mu)
    bits = border.as_bits()
    rows = list(lam)
    ell = len(rows)
    alpha = [0] * ell
    coeffs = [0] * max(n, 1)
    _ensure_recursion(n)

    def factor(i: int, i_in_d: bool, i1_in_d: bool) -> tuple[int, int]:
        if i in border:
            return 1, 0
        return _fq(i, border, i_in_d, i1_in_d)

    def inner(j: int, m: int, d: bool, sign: int, e: int) -> None:
        if j == n:
            if n >= 2:
                c, p = factor(n - 1, d, False)
                sign, e = sign * c, e + p
            coeffs[e] += sign
            return
        for k in range(ell):
            a = alpha[k]
            if a < rows[k] and (k == 0 or a < alpha[k - 1]):
                new_d = k > m
                c, p = (1, 0) if j < 2 else factor(j - 1, d, new_d)
                if c:
                    alpha[k] = a + 1
                    inner(j + 1, k, new_d, sign * c, e + p)
                    alpha[k] = a
            if a == 0:
                break

    inner(0, 0, False, 1, 0)
    poly = QPolynomial(tuple(coeffs))
    assert poly.degree <= n - len(mu), (lam, mu, poly)
    return poly
