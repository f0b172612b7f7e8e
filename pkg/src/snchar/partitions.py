"""Integer partitions: validation, parsing, conjugation and family enumeration."""
from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from math import factorial, prod

MAX_WEIGHT = 10**6


class PartitionError(ValueError):
    """Raised for malformed partitions or partition syntax."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Being a tuple, a ``Partition`` hashes and compares like one, so it can be
    used directly as a dictionary key or compared against plain tuples.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise PartitionError(f"parts must be integers, got {p!r}")
            if p <= 0:
                raise PartitionError(f"parts must be positive, got {parts}")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise PartitionError(f"parts must be weakly decreasing, got {parts}")
        if sum(parts) > MAX_WEIGHT:
            raise PartitionError(f"weight {sum(parts)} exceeds {MAX_WEIGHT}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> Partition:
        # skips validation; callers guarantee the invariants
        return tuple.__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def part(self, i: int) -> int:
        """Return the 1-based part ``i``, or 0 past the end."""
        return self[i - 1] if 0 < i <= len(self) else 0

    def contains(self, other: Iterable[int]) -> bool:
        """True if the diagram of ``other`` fits inside this one."""
        other = tuple(other)
        return len(other) <= len(self) and all(a <= b for a, b in zip(other, self))

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


def validate(parts: Iterable[int]) -> Partition:
    """Check ``parts`` and return it as a :class:`Partition`."""
    return Partition(parts)


def parse_partition(text: str) -> Partition:
    """Parse ``"4,3,2^2,1"`` style syntax; the empty string is the empty partition.

    >>> parse_partition("1^3")
    Partition('1,1,1')
    """
    text = text.strip().strip("()")
    if not text:
        return Partition()
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        base, _, exp = token.partition("^")
        try:
            value = int(base)
            times = int(exp) if exp else 1
        except ValueError:
            raise PartitionError(f"cannot parse partition token {token!r}") from None
        if times < 0:
            raise PartitionError(f"negative exponent in {token!r}")
        parts.extend([value] * times)
    return Partition(parts)


def format_partition(lam: Iterable[int], compact: bool = False) -> str:
    """Inverse of :func:`parse_partition`; ``compact`` uses ``a^k`` for runs."""
    lam = tuple(lam)
    if not compact:
        return ",".join(map(str, lam))
    out = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        out.append(str(lam[i]) if j - i == 1 else f"{lam[i]}^{j - i}")
        i = j
    return ",".join(out)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition._trusted(())
    return Partition._trusted(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def hook_number_11(lam: Partition) -> int:
    """Size of the hook at the corner cell, ``lam_1 + lam'_1 - 1`` (0 for the empty shape)."""
    if not lam:
        return 0
    return lam[0] + len(lam) - 1


@dataclass(frozen=True)
class BorderIndicator:
    """Membership flags for the partial sums of a cycle type.

    ``flags[m - 1]`` is true iff ``m`` equals ``mu_1 + ... + mu_r`` for some ``r``.
    """

    flags: tuple[bool, ...]

    @property
    def n(self) -> int:
        return len(self.flags)

    def __contains__(self, m: int) -> bool:
        return 1 <= m <= len(self.flags) and self.flags[m - 1]

    def members(self) -> set[int]:
        return {m for m, f in enumerate(self.flags, 1) if f}

    def as_bits(self) -> list[int]:
        """0/1 list indexed 0..n with a dummy 0 in slot 0, for 1-based lookups."""
        return [0] + [int(f) for f in self.flags]


def border_set(mu: Iterable[int]) -> BorderIndicator:
    mu = tuple(mu)
    flags = [False] * sum(mu)
    total = 0
    for p in mu:
        total += p
        flags[total - 1] = True
    return BorderIndicator(tuple(flags))


def iter_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part is None:
        max_part = n

    def rec(remaining: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition._trusted(prefix)
            return
        for p in range(min(remaining, cap), 0, -1):
            prefix.append(p)
            yield from rec(remaining - p, p, prefix)
            prefix.pop()

    yield from rec(n, max_part, [])


def enumerate_partitions(n: int) -> list[Partition]:
    return list(iter_partitions(n))


def enumerate_hook(k: int, l: int, n: int) -> list[Partition]:
    """Partitions of ``n`` inside the (k, l) hook, i.e. with part ``k+1`` at most ``l``."""
    if k < 0 or l < 0:
        raise ValueError("k and l must be nonnegative")
    if k == 0 and l == 0 and n > 0:
        raise ValueError("the (0,0) hook contains no nonempty partition")
    return [lam for lam in iter_partitions(n) if lam.part(k + 1) <= l]


def class_size(mu: Iterable[int]) -> int:
    """Centralizer order ``z_mu``; ``n!/z_mu`` is the size of the conjugacy class."""
    return prod(i**m * factorial(m) for i, m in Counter(mu).items())


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def degree(lam: Partition) -> int:
    """Number of standard tableaux of shape ``lam`` by the hook length formula."""
    return factorial(sum(lam)) // prod(h for row in hook_lengths(lam) for h in row)
