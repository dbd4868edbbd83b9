"""Brute-force ground truth for every counting engine.

These counters enumerate partitions and apply the defining condition
directly through the public Partition / FrobeniusSymbol types. They share
no counting logic with the series engines in ``genfunc``; the duplication
is deliberate, since agreement between the two routes is what the tests
assert. Performance is a non-goal here, so each call is guarded by a
cost ceiling.
"""

from __future__ import annotations

from .frobenius import successive_ranks, to_frobenius
from .graphical import erdos_gallai_report
from .partitions import enumerate_partitions

DEFAULT_CEILING = 50


def _check_ceiling(n: int, ceiling: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > ceiling:
        raise ValueError(f"n = {n} exceeds the brute-force ceiling {ceiling}")


def count_f_bruteforce(n: int, ceiling: int = DEFAULT_CEILING) -> int:
    """f(n) the slow way: build every Frobenius symbol of weight n and keep
    those with columns + sum(top) <= sum(bottom)."""
    _check_ceiling(n, ceiling)
    total = 0
    for p in enumerate_partitions(n):
        s = to_frobenius(p)
        if s.columns + sum(s.top) <= sum(s.bottom):
            total += 1
    return total


def count_fprime_bruteforce(n: int, ceiling: int = DEFAULT_CEILING) -> int:
    """f'(n) the slow way: keep partitions whose ranks are all <= -1."""
    _check_ceiling(n, ceiling)
    total = 0
    for p in enumerate_partitions(n):
        if all(r <= -1 for r in successive_ranks(to_frobenius(p))):
            total += 1
    return total


def count_g_bruteforce(n: int, ceiling: int = DEFAULT_CEILING) -> int:
    """g(n) routed through the full Erdos-Gallai report for every partition,
    with no early exit anywhere."""
    _check_ceiling(n, ceiling)
    total = 0
    for p in enumerate_partitions(n):
        if erdos_gallai_report(p).graphical:
            total += 1
    return total
