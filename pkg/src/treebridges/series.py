"""Log transform of counting sequences and the renewal structure it exposes.

For a sequence a with a_0 = 1, the log transform a* is defined by

    n * a_n = sum_{i=1..n} a*_i * a_{n-i},

i.e. A*(x) = x (d/dx) log A(x).  Applied to the graphical-bridge counts
b_n this recovers twice the plane-tree counts, and the companion
renewal decomposition 1 - 1/B(x) generates the irreducible bridge
counts.  Powers of that series give the distribution of the number of
irreducible parts of a uniform graphical bridge.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .bridges import graphical_bridge_counts
from .trees import plane_tree_count


def log_transform(a: list) -> list:
    """The sequence a* with n*a_n = sum a*_i a_{n-i}; requires a[0] = 1.

    Returns [a*_1, ..., a*_N] for input [a_0, ..., a_N].  Integer input
    yields integers; Fraction input yields Fractions.
    """
    if not a or a[0] != 1:
        raise ValueError("log_transform needs a sequence starting with 1")
    star: list = []
    for n in range(1, len(a)):
        acc = n * a[n]
        for i in range(1, n):
            acc -= star[i - 1] * a[n - i]
        star.append(acc)
    return star


def inverse_log_transform(star: list) -> list:
    """Rebuild [a_0, ..., a_N] from [a*_1, ..., a*_N]; left inverse of log_transform."""
    a: list = [1]
    for n in range(1, len(star) + 1):
        acc = sum(star[i - 1] * a[n - i] for i in range(1, n + 1))
        q, r = divmod(acc, n)
        a.append(q if r == 0 else Fraction(acc, n))
    return a


def irreducible_bridge_counts(b: list) -> list:
    """Coefficients of 1 - 1/B(x) for a counting sequence with b[0] = 1.

    Returns [i_0, i_1, ..., i_N] with i_0 = 0.  For the graphical-bridge
    counts these are the numbers of irreducible bridges.
    """
    if not b or b[0] != 1:
        raise ValueError("irreducible_bridge_counts needs b[0] = 1")
    recip = [1]  # coefficients of 1/B(x)
    for k in range(1, len(b)):
        recip.append(-sum(b[j] * recip[k - j] for j in range(1, k + 1)))
    return [0] + [-c for c in recip[1:]]


@lru_cache(maxsize=None)
def _tables(n: int) -> tuple[tuple, tuple]:
    b = graphical_bridge_counts(n)
    return b, tuple(irreducible_bridge_counts(list(b)))


def parts_count_distribution(n: int) -> dict[int, Fraction]:
    """Distribution of the number of irreducible parts of a uniform
    graphical bridge of length 2n.

    P(m parts) = [x^n] (1 - 1/B(x))^m / b_n; only nonzero entries are
    returned.
    """
    if n < 1:
        raise ValueError(f"parts_count_distribution needs n >= 1, got {n}")
    b, irr = _tables(n)
    dist: dict[int, Fraction] = {}
    power = [0] * (n + 1)
    power[0] = 1
    for m in range(1, n + 1):
        nxt = [0] * (n + 1)
        for lo in range(n):
            coeff = power[lo]
            if coeff:
                for k in range(1, n - lo + 1):
                    if irr[k]:
                        nxt[lo + k] += coeff * irr[k]
        power = nxt
        if power[n]:
            dist[m] = Fraction(power[n], b[n])
    assert sum(dist.values()) == 1
    return dist


def mean_inverse_parts(n: int) -> Fraction:
    """E[1 / (number of irreducible parts)] for a uniform graphical
    bridge of length 2n, as an exact rational."""
    return sum(
        (Fraction(1, m) * p for m, p in parts_count_distribution(n).items()),
        start=Fraction(0),
    )


def convergence_table(n_max: int) -> list[tuple[int, Fraction, float, float]]:
    """Rows (n, ratio, float(ratio), |ratio - limit|) for n = 1..n_max.

    ratio is the exact rational 2*T(n) / (n * b_n), whose limit is the
    exact zero-area stopping probability complement exp(-2*xi).
    """
    from .constants import tree_series
    import math

    b = graphical_bridge_counts(n_max)
    limit = math.exp(-2 * tree_series().value)
    rows = []
    for n in range(1, n_max + 1):
        ratio = Fraction(2 * plane_tree_count(n), n * b[n])
        rows.append((n, ratio, float(ratio), abs(float(ratio) - limit)))
    return rows


def parts_negbin_tv_distance(n: int) -> float:
    """Total-variation distance between the part-count distribution at n
    and 1 + X with X negative binomial (r = 2, success prob 1 - rho).

    X counts failures before the second success, so
    P(1 + X = m) = m * (1-rho)^2 * rho^(m-1) for m >= 1.
    """
    import math

    from .constants import exact_zero_area_prob

    rho = exact_zero_area_prob().value
    dist = parts_count_distribution(n)
    acc = 0.0
    mass = 0.0
    for m in range(1, n + 1):
        q = m * (1 - rho) ** 2 * rho ** (m - 1)
        mass += q
        acc += abs(float(dist.get(m, 0)) - q)
    # the negative binomial keeps mass beyond m = n; the exact
    # distribution has none there
    return 0.5 * (acc + (1.0 - mass))


def regular_variation_ratio(n: int, x: int = 2) -> float:
    """Diagnostic ratio t(x*n) / (x^(-3/2) t(n)) for t(n) = 2 T(n) / 4^n.

    Approaches 1 as n grows if t varies regularly with index -3/2, which
    is the shape the log-transformed bridge sequence is expected to have.
    """
    if n < 1 or x < 1:
        raise ValueError("regular_variation_ratio needs n >= 1, x >= 1")
    m = x * n
    exact = Fraction(plane_tree_count(m), plane_tree_count(n) * 4 ** (m - n))
    return float(exact) * x**1.5
