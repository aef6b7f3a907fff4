"""High-precision evaluation of the limiting constants, with error bounds.

The central quantity is the series

    xi = sum_{k >= 1} T(k) / (k * 4^k)

over the plane-tree counts T(k).  Everything else is elementary in xi:
the growth constant of the graphical-sequence count is

    C = Gamma(3/4) / (2^(5/2) * pi) * exp(xi),

and the probability that the stopped lazy walk ends with area exactly
zero is rho = 1 - exp(-2*xi).

Every value is returned as a BoundedReal whose error_bound is meant
rigorously.  The series tail after N terms is bounded by

    tail(N) <= (2 / (3*sqrt(pi))) * N^(-3/2),

which follows from k*T(k) <= 2*binomial(2k-1, k) (the divisor sum is
dominated by its largest term) together with
binomial(2k, k) <= 4^k / sqrt(pi*k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# terms up to here are accumulated as exact rationals and rounded once
EXACT_TERMS = 64
DEFAULT_TERMS = 10_000

# conservative cover for every floating-point rounding in the series
# evaluation: per-term conversions are correctly rounded (int / int),
# the float tail is fsum'd, and the final additions cost a few ulps
FLOAT_SLOP = 5e-15


@dataclass(frozen=True)
class BoundedReal:
    """A value together with a rigorous absolute error bound."""

    value: float
    error_bound: float

    @property
    def low(self) -> float:
        return self.value - self.error_bound

    @property
    def high(self) -> float:
        return self.value + self.error_bound

    def contains(self, x: float) -> bool:
        return self.low <= x <= self.high

    @staticmethod
    def from_interval(lo: float, hi: float, slack: float = 0.0) -> "BoundedReal":
        return BoundedReal((lo + hi) / 2, (hi - lo) / 2 + slack)


@lru_cache(maxsize=4)
def _plane_tree_count_table(n_max: int) -> tuple:
    """Exact T(k) for k = 0..n_max, built in one sieved sweep.

    The big binomials binomial(2k-1, k) are produced by the ratio
    recurrence c_{k} = c_{k-1} * 2 * (2k-1) / k, which is far cheaper
    than independent binomial calls at this scale.
    """
    phi = list(range(n_max + 1))
    for p in range(2, n_max + 1):
        if phi[p] == p:  # p prime
            for m in range(p, n_max + 1, p):
                phi[m] -= phi[m] // p
    proper_divs: list[list[int]] = [[] for _ in range(n_max + 1)]
    for d in range(1, n_max // 2 + 1):
        for m in range(2 * d, n_max + 1, d):
            proper_divs[m].append(d)
    central = [0] * (n_max + 1)  # central[k] = binomial(2k-1, k)
    out = [0] * (n_max + 1)
    c = 1
    for k in range(1, n_max + 1):
        if k > 1:
            c = c * (2 * (2 * k - 1)) // k
        central[k] = c
        acc = c
        for d in proper_divs[k]:
            acc += central[d] * phi[k // d]
        assert acc % k == 0
        out[k] = acc // k
    return tuple(out)


def series_tail_bound(terms: int) -> float:
    """Rigorous bound on the tree series tail after the given many terms."""
    if terms < 1:
        raise ValueError("need at least one term")
    return 2.0 / (3.0 * math.sqrt(math.pi)) * terms**-1.5


@lru_cache(maxsize=8)
def tree_series(terms: int = DEFAULT_TERMS) -> BoundedReal:
    """Partial sum of sum_k T(k) / (k * 4^k) with a rigorous bound.

    The first EXACT_TERMS terms are summed as exact rationals and
    rounded once; later terms are converted individually (int by int
    division is correctly rounded) and combined with math.fsum.  The
    error bound is the series tail plus FLOAT_SLOP.
    """
    if terms < 1:
        raise ValueError(f"tree_series needs terms >= 1, got {terms}")
    trees = _plane_tree_count_table(terms)
    exact = Fraction(0)
    for k in range(1, min(terms, EXACT_TERMS) + 1):
        exact += Fraction(trees[k], k << (2 * k))
    rest = [trees[k] / (k << (2 * k)) for k in range(EXACT_TERMS + 1, terms + 1)]
    value = float(exact) + math.fsum(rest)
    return BoundedReal(value, series_tail_bound(terms) + FLOAT_SLOP)


def gamma_three_quarters() -> BoundedReal:
    """Gamma(3/4) by the platform's Lanczos-class evaluator.

    The libm gamma is correct to a couple of ulps here; the bound is set
    well above that and the value is certified in the test suite against
    an independent quadrature of the defining integral and against the
    reflection identity Gamma(3/4) * Gamma(1/4) = pi * sqrt(2).
    """
    return BoundedReal(math.gamma(0.75), 1e-15)


def gamma_prefactor() -> BoundedReal:
    """Gamma(3/4) / (2^(5/2) * pi), the growth constant with xi zeroed."""
    g = gamma_three_quarters()
    denom = 2**2.5 * math.pi
    return BoundedReal.from_interval(
        g.low / denom, g.high / denom, slack=4e-17
    )


@lru_cache(maxsize=8)
def count_growth_constant(terms: int = DEFAULT_TERMS) -> BoundedReal:
    """C: the constant in the 4^n / n^(3/4) growth of the number of
    graphical sequences; equals gamma_prefactor * exp(tree series)."""
    xi = tree_series(terms)
    pref = gamma_prefactor()
    lo = pref.low * math.exp(xi.low)
    hi = pref.high * math.exp(xi.high)
    return BoundedReal.from_interval(lo, hi, slack=4e-17)


@lru_cache(maxsize=8)
def exact_zero_area_prob(terms: int = DEFAULT_TERMS) -> BoundedReal:
    """rho: probability that the stopped lazy walk has area exactly
    zero; equals 1 - exp(-2 * tree series), increasing in the series."""
    xi = tree_series(terms)
    lo = -math.expm1(-2.0 * xi.low)
    hi = -math.expm1(-2.0 * xi.high)
    return BoundedReal.from_interval(lo, hi, slack=4e-17)
