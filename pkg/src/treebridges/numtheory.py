"""Small number-theoretic helpers: totient, divisors, exact binomials."""

from __future__ import annotations

import math
from functools import lru_cache


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler's totient of n, by trial-division factorization."""
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    """Sorted list of positive divisors of n."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def binomial(n: int, k: int) -> int:
    """binomial(n, k) as an exact integer; 0 when k > n or k < 0."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
