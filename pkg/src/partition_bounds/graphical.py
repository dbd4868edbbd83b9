"""Graphical partitions: Erdos-Gallai slack reports, the exhaustive counter
g(n), and Havel-Hakimi realization witnesses.

A partition is graphical when it is the degree sequence of a simple
undirected graph. The Erdos-Gallai criterion says a nonincreasing sequence
with even sum is graphical iff, for every prefix length m,

    sum_{i<=m} d_i  <=  m(m-1) + sum_{i>m} min(m, d_i).

``slack[m-1]`` below is the right side minus the left side, so a sequence
is graphical exactly when the weight is even and no slack entry is negative.

Pure functions throughout; counting different weights in parallel needs no
coordination.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, _conjugate_parts, _partition_tuples


@dataclass(frozen=True)
class EgReport:
    """Per-index Erdos-Gallai slack plus the parity check.

    The full slack vector (one entry per part) is always present so that a
    failure can be localized, not just detected.
    """

    parity_ok: bool
    slack: tuple[int, ...]
    graphical: bool

    def __post_init__(self) -> None:
        expected = self.parity_ok and all(s >= 0 for s in self.slack)
        if self.graphical != expected:
            raise ValueError("graphical verdict is inconsistent with parity and slack")


@dataclass(frozen=True)
class RealizationWitness:
    """Edge list of a simple graph on vertices 1..ell realizing a partition."""

    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (1 <= u < v):
                raise ValueError(f"edge ({u}, {v}) is not a sorted simple-graph edge")

    def degrees(self) -> tuple[int, ...]:
        """Degree multiset of the witness, nonincreasing."""
        seen: dict[int, int] = {}
        for u, v in self.edges:
            seen[u] = seen.get(u, 0) + 1
            seen[v] = seen.get(v, 0) + 1
        return tuple(sorted(seen.values(), reverse=True))


def _slack_vector(parts: tuple[int, ...]) -> list[int]:
    # slack[m-1] = m(m-1) + sum_{i>m} min(m, d_i) - sum_{i<=m} d_i.
    # The tail sum splits at t = #{i : d_i >= m} (a conjugate entry), giving
    # an O(ell + d_1) pass instead of the naive O(ell^2).
    ell = len(parts)
    if ell == 0:
        return []
    prefix = [0] * (ell + 1)
    for i, d in enumerate(parts):
        prefix[i + 1] = prefix[i] + d
    total = prefix[ell]
    conj = _conjugate_parts(parts)
    width = len(conj)
    out = []
    for m in range(1, ell + 1):
        t = conj[m - 1] if m <= width else 0
        if t > m:
            tail = m * (t - m) + total - prefix[t]
        else:
            tail = total - prefix[m]
        out.append(m * (m - 1) + tail - prefix[m])
    return out


def _graphical_even(parts: tuple[int, ...]) -> bool:
    # Assumes even weight; early exit on the first negative slack.
    ell = len(parts)
    if ell == 0:
        return True
    prefix = [0] * (ell + 1)
    for i, d in enumerate(parts):
        prefix[i + 1] = prefix[i] + d
    total = prefix[ell]
    conj = _conjugate_parts(parts)
    width = len(conj)
    for m in range(1, ell + 1):
        t = conj[m - 1] if m <= width else 0
        if t > m:
            tail = m * (t - m) + total - prefix[t]
        else:
            tail = total - prefix[m]
        if m * (m - 1) + tail < prefix[m]:
            return False
    return True


def erdos_gallai_report(p: Partition) -> EgReport:
    """Evaluate the Erdos-Gallai inequality at every index.

    No early exit here: the report exists to explain failures, so the whole
    slack vector is always computed. The empty partition reports graphical
    (it realizes the empty graph).
    """
    parity_ok = p.weight % 2 == 0
    slack = tuple(_slack_vector(p.parts))
    return EgReport(
        parity_ok=parity_ok,
        slack=slack,
        graphical=parity_ok and all(s >= 0 for s in slack),
    )


def is_graphical(p: Partition) -> bool:
    """True iff p is the degree sequence of some simple graph."""
    return p.weight % 2 == 0 and _graphical_even(p.parts)


def count_g(n: int) -> int:
    """Number of graphical partitions of n, by exhaustive testing.

    Every partition of n is enumerated and tested; this is the accurate
    (if slow) route, and it doubles as the oracle for any faster method.
    Zero for odd n >= 1; g(0) = 1 for the empty graph.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 1
    if n % 2:
        return 0
    return sum(1 for parts in _partition_tuples(n) if _graphical_even(parts))


def havel_hakimi_witness(p: Partition) -> RealizationWitness | None:
    """Realize p as a simple graph, or return None if p is not graphical.

    Standard highest-degree-first reduction. After each step the remaining
    degrees are re-sorted nonincreasing with ties broken by original vertex
    index, so the witness is deterministic.
    """
    remaining = [(d, v) for v, d in enumerate(p.parts, start=1)]
    edges: list[tuple[int, int]] = []
    while remaining:
        remaining.sort(key=lambda item: (-item[0], item[1]))
        d, v = remaining[0]
        if d == 0:
            break
        rest = remaining[1:]
        if d > len(rest):
            return None
        if rest[d - 1][0] == 0:
            return None
        for i in range(d):
            td, tv = rest[i]
            edges.append((v, tv) if v < tv else (tv, v))
            rest[i] = (td - 1, tv)
        remaining = rest
    return RealizationWitness(frozenset(edges))
