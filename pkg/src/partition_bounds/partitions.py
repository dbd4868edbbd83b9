"""Integer partitions: the core value type, exhaustive enumeration,
conjugation, Durfee square size, and the exact partition counter p(n).

Everything here is pure and immutable; values can be shared freely across
threads and different weights can be processed in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Partition:
    """A nonincreasing sequence of positive integers.

    ``weight`` caches the sum of the parts; the empty partition has weight 0.
    Zero parts are never stored. Use :func:`from_raw` to normalize arbitrary
    nonnegative input (it sorts and strips zeros); the constructor itself
    insists on already-normalized parts.
    """

    parts: tuple[int, ...]
    weight: int = field(init=False)

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        prev = None
        for d in parts:
            if d < 1:
                raise ValueError(
                    f"parts must be positive, got {d}; use from_raw to strip zeros"
                )
            if prev is not None and d > prev:
                raise ValueError(f"parts must be nonincreasing, got {parts}")
            prev = d
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)


def from_raw(values: Iterable[int]) -> Partition:
    """Build a Partition from arbitrary nonnegative integers.

    Sorts nonincreasing and drops zeros (a zero carries no Ferrers cell and
    realizes only an isolated vertex). Negative entries are rejected.
    """
    ordered = sorted(values, reverse=True)
    if ordered and ordered[-1] < 0:
        raise ValueError(f"negative part {ordered[-1]} is not allowed")
    return Partition(tuple(d for d in ordered if d > 0))


def _partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    """Yield the parts of every partition of n, largest part first,
    in reverse-lexicographic order: (n) first, (1, ..., 1) last.

    Successor step: decrement the rightmost part above 1, then refill the
    freed weight greedily with parts no larger than the decremented value.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield ()
        return
    a = [0] * n
    a[0] = n
    k = 1
    while True:
        yield tuple(a[:k])
        j = k - 1
        ones = 0
        while j >= 0 and a[j] == 1:
            j -= 1
            ones += 1
        if j < 0:
            return
        x = a[j] - 1
        a[j] = x
        rem = ones + 1
        j += 1
        while rem > x:
            a[j] = x
            rem -= x
            j += 1
        if rem > 0:
            a[j] = rem
            j += 1
        k = j


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse-lexicographic
    order. n = 0 yields exactly the empty partition."""
    for parts in _partition_tuples(n):
        yield Partition(parts)


def _conjugate_parts(parts: tuple[int, ...]) -> tuple[int, ...]:
    # Column counts of the Ferrers diagram; O(len + largest part) thanks to
    # the nonincreasing order.
    ell = len(parts)
    if ell == 0:
        return ()
    out = []
    i = ell
    for j in range(1, parts[0] + 1):
        while i > 0 and parts[i - 1] < j:
            i -= 1
        out.append(i)
    return tuple(out)


def conjugate(p: Partition) -> Partition:
    """Return the conjugate partition (columns of the Ferrers diagram).

    An involution that preserves weight.
    """
    return Partition(_conjugate_parts(p.parts))


def durfee_size(p: Partition) -> int:
    """Side of the largest square fitting in the Ferrers diagram:
    max { k : parts[k-1] >= k }, and 0 for the empty partition."""
    k = 0
    for i, d in enumerate(p.parts):
        if d >= i + 1:
            k = i + 1
        else:
            break
    return k


def _pentagonal_table(n: int) -> list[int]:
    # Euler's recurrence over generalized pentagonal numbers; exact ints.
    table = [0] * (n + 1)
    table[0] = 1
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * table[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table[m] = total
    return table


def count_p(n: int) -> int:
    """Number of partitions of n, as an exact (unbounded) integer.

    Computed by the pentagonal-number recurrence; agrees with the length
    of :func:`enumerate_partitions` by construction and by test.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _pentagonal_table(n)[n]
