"""Coefficient-extraction engines for the counting chain.

Everything in this module is exact integer arithmetic on truncated series:
a product such as prod_{i>=2} 1/(1 - q^i) is realized as a dense coefficient
array indexed by weight, never symbolically and never in floating point.

Counters provided:

* ``count_fprime_gf``    -- partitions into parts >= 2 (the product route
  to f'(n), the number of partitions whose successive ranks are all <= -1).
* ``count_fprime_ranks`` -- the same quantity by direct rank inspection.
* ``count_f_gf``         -- f(n), Frobenius symbols of weight n obeying
  columns + sum(top) <= sum(bottom), via a two-family dynamic program.
* ``count_A`` / ``count_B`` -- the two sides of the Andrews-Bressoud
  equinumerosity (residue-avoiding partitions vs. rank-window partitions),
  implemented independently of each other on purpose.

Each call builds its own tables and shares no state, so calls for
different arguments are independent and parallelizable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable

from .frobenius import _ranks_from_parts
from .partitions import _partition_tuples


@dataclass(frozen=True)
class CoefficientTable:
    """Exact series coefficients for weights 0..max_n."""

    values: tuple[int, ...]
    max_n: int

    def __post_init__(self) -> None:
        if self.max_n < 0:
            raise ValueError(f"max_n must be nonnegative, got {self.max_n}")
        if len(self.values) != self.max_n + 1:
            raise ValueError(
                f"need {self.max_n + 1} coefficients, got {len(self.values)}"
            )
        if any(not isinstance(v, int) or v < 0 for v in self.values):
            raise ValueError("coefficients must be nonnegative exact integers")

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.max_n:
            raise IndexError(f"weight {n} outside [0, {self.max_n}]")
        return self.values[n]


def _series_for_parts(part_values: Iterable[int], max_n: int) -> CoefficientTable:
    """Coefficients of prod 1/(1 - q^v) over the given part values."""
    coeffs = [0] * (max_n + 1)
    coeffs[0] = 1
    for v in sorted(set(part_values)):
        if v < 1:
            raise ValueError(f"part values must be positive, got {v}")
        if v > max_n:
            break
        for j in range(v, max_n + 1):
            coeffs[j] += coeffs[j - v]
    return CoefficientTable(tuple(coeffs), max_n)


def count_fprime_gf(n: int) -> int:
    """f'(n) as the weight-n coefficient of the product over parts >= 2."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _series_for_parts(range(2, n + 1), n)[n]


def _distinct_subset_table(max_sum: int, max_k: int) -> list[list[int]]:
    # table[k][m] = number of k-element sets of distinct positive integers
    # with sum m. Items are processed one value at a time; reading row k-1
    # while writing row k keeps each value usable at most once.
    table = [[0] * (max_sum + 1) for _ in range(max_k + 1)]
    table[0][0] = 1
    for v in range(1, max_sum + 1):
        for k in range(max_k, 0, -1):
            row = table[k]
            prev = table[k - 1]
            for m in range(max_sum, v - 1, -1):
                c = prev[m - v]
                if c:
                    row[m] += c
    return table


def count_f_gf(n: int) -> int:
    """f(n): Frobenius symbols of weight n with columns + sum(top) <= sum(bottom).

    A symbol is the same thing as a pair (A, B) of equal-size sets, where
    A = {a_i + 1} collects the top row plus its column count (distinct
    positive integers) and B = {b_i} is the bottom row (distinct nonnegative
    integers). The weight is sum(A) + sum(B) and the defining condition is
    sum(A) <= sum(B), so

        f(n) = sum over k, over m <= n - m, of  T[k][m] * B[k][n - m]

    with T the distinct-positive table and B[k][r] = T[k][r] + T[k-1][r]
    (the second term spends one column on the value 0).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    kmax = (isqrt(8 * n + 1) - 1) // 2
    tops = _distinct_subset_table(n, kmax)

    def bottoms(k: int, r: int) -> int:
        c = tops[k][r]
        if k >= 1:
            c += tops[k - 1][r]
        return c

    total = 0
    for k in range(kmax + 1):
        row = tops[k]
        for m in range(n // 2 + 1):
            if row[m]:
                total += row[m] * bottoms(k, n - m)
    return total


def _validate_modulus_residue(modulus: int, residue: int) -> None:
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    if residue < 0:
        raise ValueError(f"residue must be nonnegative, got {residue}")


def count_A(modulus: int, residue: int, n: int) -> int:
    """Partitions of n with no part congruent to 0, residue, or -residue
    modulo the given modulus; computed from the truncated product over the
    allowed part values."""
    _validate_modulus_residue(modulus, residue)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    banned = {0, residue % modulus, (-residue) % modulus}
    allowed = [v for v in range(1, n + 1) if v % modulus not in banned]
    return _series_for_parts(allowed, n)[n] if n else 1


def count_B(modulus: int, residue: int, n: int) -> int:
    """Partitions of n whose successive ranks all lie in the window
    [2 - residue, modulus - residue - 2]; computed by enumeration and rank
    inspection, independently of any identity it is used to test."""
    _validate_modulus_residue(modulus, residue)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    lo = 2 - residue
    hi = modulus - residue - 2
    total = 0
    for parts in _partition_tuples(n):
        ranks = _ranks_from_parts(parts)
        if all(lo <= r <= hi for r in ranks):
            total += 1
    return total


def count_fprime_ranks(n: int) -> int:
    """f'(n) by its defining condition: partitions of n all of whose
    successive ranks are <= -1. Must agree with :func:`count_fprime_gf`;
    the two count different sets of the same size, so only totals match."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    total = 0
    for parts in _partition_tuples(n):
        if all(r <= -1 for r in _ranks_from_parts(parts)):
            total += 1
    return total
