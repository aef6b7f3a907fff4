from __future__ import annotations

from math import comb, gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treebridges.numtheory import binomial, divisors, euler_phi


def test_euler_phi_small_values():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_euler_phi_prime_and_prime_power():
    assert euler_phi(97) == 96
    assert euler_phi(1024) == 512
    assert euler_phi(3**5) == 3**5 - 3**4


def test_euler_phi_rejects_nonpositive():
    with pytest.raises(ValueError):
        euler_phi(0)
    with pytest.raises(ValueError):
        euler_phi(-3)


def test_euler_phi_divisor_sum():
    # totients of the divisors partition the n residues by denominator
    for n in range(1, 400):
        assert sum(euler_phi(d) for d in divisors(n)) == n


@given(st.integers(1, 300), st.integers(1, 300))
def test_euler_phi_multiplicative_on_coprime_pairs(a, b):
    if gcd(a, b) == 1:
        assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)


def test_divisors_small():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(97) == [1, 97]
    assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]


def test_divisors_sorted_and_complete():
    for n in range(1, 200):
        assert divisors(n) == [k for k in range(1, n + 1) if n % k == 0]


def test_divisors_rejects_nonpositive():
    with pytest.raises(ValueError):
        divisors(0)


def test_binomial_matches_stdlib_inside_range():
    for n in range(12):
        for k in range(n + 1):
            assert binomial(n, k) == comb(n, k)


def test_binomial_zero_outside_range():
    assert binomial(5, 6) == 0
    assert binomial(5, -1) == 0
    assert binomial(0, 1) == 0


def test_binomial_rejects_negative_order():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@given(st.integers(1, 100), st.integers(-1, 101))
def test_binomial_pascal_recurrence(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
