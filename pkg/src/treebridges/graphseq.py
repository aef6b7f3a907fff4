"""Graphical degree sequences: the realizability test and exact counts.

A non-decreasing sequence d over [0, n-1] is graphical when some simple
graph on n vertices has exactly these degrees.  The classic
characterization: the sum must be even, and for every k (with the
sequence read in non-increasing order)

    sum_{i <= k} d_i  <=  k*(k-1) + sum_{i > k} min(d_i, k).

Counting proceeds by enumerating non-increasing candidate sequences with
a sound prefix prune; a brute-force oracle over all graphs on up to 6
vertices certifies the test and the counts independently.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

# all 2^binomial(n,2) graphs are materialized; 6 is where that stops
ORACLE_CAP = 6
# candidate enumeration is binomial(2n-1, n) sequences before pruning
COUNT_CAP = 14


def _erdos_gallai_descending(d: list[int]) -> bool:
    n = len(d)
    lhs = 0
    for k in range(1, n + 1):
        lhs += d[k - 1]
        rhs = k * (k - 1)
        for i in range(k, n):
            di = d[i]
            rhs += di if di < k else k
        if lhs > rhs:
            return False
    return True


def is_graphical_sequence(seq) -> bool:
    """Realizability test for a non-decreasing degree sequence.

    Entries must lie in [0, n-1] and the sequence must be sorted
    non-decreasing; both are validated.
    """
    d = list(seq)
    n = len(d)
    if n == 0:
        return True
    for v in d:
        if not isinstance(v, int) or not 0 <= v <= n - 1:
            raise ValueError(f"degree {v!r} outside [0, {n - 1}]")
    if any(d[i] > d[i + 1] for i in range(n - 1)):
        raise ValueError("degree sequence must be non-decreasing")
    if sum(d) % 2:
        return False
    return _erdos_gallai_descending(d[::-1])


def all_graph_degree_sequences(n: int) -> set:
    """Degree sequences (sorted non-decreasing) of all graphs on n
    labelled vertices; the brute-force oracle, capped at n = 6."""
    if n < 0:
        raise ValueError(f"needs n >= 0, got {n}")
    if n > ORACLE_CAP:
        raise ValueError(f"graph oracle capped at n = {ORACLE_CAP}, got {n}")
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        m = mask
        idx = 0
        while m:
            if m & 1:
                a, b = pairs[idx]
                deg[a] += 1
                deg[b] += 1
            m >>= 1
            idx += 1
        seen.add(tuple(sorted(deg)))
    return seen


def _count_by_enumeration(n: int, prune: bool) -> int:
    """Count graphical sequences of length n by walking all
    non-increasing candidates.

    The prune drops a partial sequence d_1 >= ... >= d_k as soon as its
    k-th inequality is unsatisfiable by any completion: later entries
    are at most d_k, so the right side can reach at most
    k*(k-1) + (n-k)*min(d_k, k).  Dropping such prefixes never loses a
    graphical sequence.
    """
    total = 0
    d = [0] * n

    def descend(idx: int, mx: int, acc: int) -> None:
        nonlocal total
        if idx == n:
            if acc % 2 == 0 and _erdos_gallai_descending(d):
                total += 1
            return
        k = idx + 1
        for v in range(mx, -1, -1):
            if prune and acc + v > k * (k - 1) + (n - k) * min(v, k):
                continue
            d[idx] = v
            descend(idx + 1, v, acc + v)

    descend(0, n - 1, 0)
    return total


@lru_cache(maxsize=None)
def count_graphical_sequences(n: int) -> int:
    """Number of graphical degree sequences of length n."""
    if n < 1:
        raise ValueError(f"count_graphical_sequences needs n >= 1, got {n}")
    if n > COUNT_CAP:
        raise ValueError(f"sequence count capped at n = {COUNT_CAP}, got {n}")
    return _count_by_enumeration(n, prune=True)


def ratio_table(n_max: int) -> list[tuple[int, int, float]]:
    """Rows (n, count, n^(3/4) * count / 4^n) for n = 1..n_max.

    The scaled ratio drifts toward the growth constant C, but far too
    slowly to pin C at desk scale; the table is a stabilization
    diagnostic, not an estimator.
    """
    rows = []
    for n in range(1, n_max + 1):
        g = count_graphical_sequences(n)
        rows.append((n, g, n**0.75 * g / 4**n))
    return rows
