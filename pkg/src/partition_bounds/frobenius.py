"""Frobenius symbols and rank statistics.

A partition with Durfee square side k maps to a two-row symbol: column m
holds the arm length a_m = d_m - m (cells right of diagonal cell (m, m))
on top and the leg length b_m = d'_m - m (cells below it, d' the conjugate)
on the bottom. Both rows are strictly decreasing and nonnegative, and

    weight = k + sum(top) + sum(bottom)

matches the partition weight. The map is a bijection; the empty partition
corresponds to the empty (k = 0) symbol.

The m-th successive rank is a_m - b_m, and the Dyson rank (largest part
minus number of parts) equals the first successive rank.

All functions are pure and all values immutable, so everything here can be
shared across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .partitions import Partition, _conjugate_parts, durfee_size

# Successive ranks a_m - b_m, one entry per symbol column.
RankVector = tuple[int, ...]


@dataclass(frozen=True)
class FrobeniusSymbol:
    """Two equal-length, strictly decreasing rows of nonnegative integers."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self) -> None:
        top = tuple(self.top)
        bottom = tuple(self.bottom)
        if len(top) != len(bottom):
            raise ValueError(
                f"rows must have equal length, got {len(top)} and {len(bottom)}"
            )
        for name, row in (("top", top), ("bottom", bottom)):
            for i, v in enumerate(row):
                if v < 0:
                    raise ValueError(f"{name} row must be nonnegative, got {row}")
                if i and row[i - 1] <= v:
                    raise ValueError(
                        f"{name} row must be strictly decreasing, got {row}"
                    )
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @property
    def columns(self) -> int:
        return len(self.top)

    @property
    def weight(self) -> int:
        return self.columns + sum(self.top) + sum(self.bottom)


def to_frobenius(p: Partition) -> FrobeniusSymbol:
    """Read the Frobenius symbol off the Ferrers diagram of p."""
    k = durfee_size(p)
    conj = _conjugate_parts(p.parts)
    top = tuple(p.parts[m] - m - 1 for m in range(k))
    bottom = tuple(conj[m] - m - 1 for m in range(k))
    return FrobeniusSymbol(top, bottom)


def from_frobenius(s: FrobeniusSymbol) -> Partition:
    """Rebuild the unique partition whose symbol is s.

    Rows 1..k of the partition are the arms plus the diagonal offset; the
    rows below the Durfee square are recovered from the column heights
    bottom[m] + m + 1 implied by the legs.
    """
    k = s.columns
    rows = [s.top[m] + m + 1 for m in range(k)]
    heights = [s.bottom[m] + m + 1 for m in range(k)]
    i = k + 1
    while True:
        c = sum(1 for h in heights if h >= i)
        if c == 0:
            break
        rows.append(c)
        i += 1
    return Partition(tuple(rows))


def leg_length_recurrence(p: Partition, m: int, previous: Sequence[int]) -> int:
    """Leg length b_m by the running-subtraction recursion

        b_m = m(m-1)/2 + sum_{i>m} min(m, d_i) - (b_1 + ... + b_{m-1})

    given the earlier legs in ``previous``. Kept as a deliberately separate
    route from the conjugate-based legs in :func:`to_frobenius`; the two
    must agree, and tests enforce that they do.
    """
    k = durfee_size(p)
    if not 1 <= m <= k:
        raise ValueError(f"m must lie in [1, {k}] for this partition, got {m}")
    previous = tuple(previous)
    if len(previous) != m - 1:
        raise ValueError(
            f"previous must hold exactly the first {m - 1} legs, got {len(previous)}"
        )
    tail = sum(min(m, d) for d in p.parts[m:])
    return m * (m - 1) // 2 + tail - sum(previous)


def successive_ranks(s: FrobeniusSymbol) -> RankVector:
    """Componentwise top minus bottom."""
    return tuple(a - b for a, b in zip(s.top, s.bottom))


def _ranks_from_parts(parts: tuple[int, ...], conj: tuple[int, ...] | None = None) -> RankVector:
    # a_m - b_m = d_m - d'_m; fast path for counting sweeps.
    if conj is None:
        conj = _conjugate_parts(parts)
    k = 0
    for i, d in enumerate(parts):
        if d >= i + 1:
            k = i + 1
        else:
            break
    return tuple(parts[m] - conj[m] for m in range(k))


def dyson_rank(p: Partition) -> int:
    """Largest part minus number of parts; equals the first successive rank.

    Undefined (and rejected) for the empty partition.
    """
    if not p.parts:
        raise ValueError("the empty partition has no Dyson rank")
    return p.parts[0] - len(p.parts)
