"""Coprime-gap machinery: sieve, gap function, interval fits, CRT shifts."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from smallstretch.numtheory import (
    coprime_interval_check,
    coprime_near_half,
    coprime_near_half_array,
    coprime_sequence,
    crt_shift,
    distinct_primes,
    genus_from_terms,
    jacobsthal,
    jacobsthal_bruteforce,
    jacobsthal_fit,
    jacobsthal_table,
    min_interval_constant,
    radical,
    smallest_prime_factor_sieve,
)

ANCHORS = {1: 1, 2: 2, 6: 4, 30: 6, 210: 10, 2310: 14}


def test_smallest_prime_factor_sieve():
    spf = smallest_prime_factor_sieve(20)
    assert [int(spf[n]) for n in (2, 3, 4, 9, 15, 17, 20)] == [2, 3, 2, 3, 3, 17, 2]
    with pytest.raises(ValueError):
        smallest_prime_factor_sieve(0)


def test_distinct_primes_and_radical():
    assert distinct_primes(1) == ()
    assert distinct_primes(12) == (2, 3)
    assert distinct_primes(97) == (97,)
    assert radical(1) == 1
    assert radical(12) == 6
    assert radical(360) == 30


def test_jacobsthal_anchors():
    for n, j in ANCHORS.items():
        assert jacobsthal(n) == j
        assert jacobsthal_bruteforce(n) == j


def test_jacobsthal_matches_bruteforce_small_range():
    for n in range(1, 301):
        assert jacobsthal(n) == jacobsthal_bruteforce(n)


@given(st.integers(1, 5000))
def test_jacobsthal_matches_bruteforce_sampled(n):
    assert jacobsthal(n) == jacobsthal_bruteforce(n)


def test_jacobsthal_depends_only_on_radical():
    assert jacobsthal(8) == jacobsthal(2)
    assert jacobsthal(360) == jacobsthal(30)


def test_bruteforce_window_limit_guard():
    # 2n + 1 consecutive integers always contain a window witness; a
    # smaller cap cannot certify the scan is complete.
    assert jacobsthal_bruteforce(30, window_limit=61) == 6
    with pytest.raises(ValueError, match="window"):
        jacobsthal_bruteforce(30, window_limit=60)


def test_jacobsthal_table_alignment():
    limit = 200
    table = jacobsthal_table(limit)
    assert len(table) == limit + 1
    assert table[0] == 0
    for n in range(1, limit + 1):
        assert table[n] == jacobsthal(n)
    with pytest.raises(ValueError):
        jacobsthal_table(0)


def test_jacobsthal_fit_constant():
    fit = jacobsthal_fit(2000)
    assert fit.argmax == 3
    assert fit.constant == 2.0 / math.log(3.0) ** 2
    assert fit.bound_holds(1.66)
    assert not fit.bound_holds(1.65)


def test_coprime_interval_check_anchors():
    assert coprime_interval_check(6, 1.75).ok
    assert not coprime_interval_check(6, 1.5).ok
    good = coprime_interval_check(2, 4.25, m_max=100)
    assert good.ok and good.first_failure is None
    bad = coprime_interval_check(2, 4.0, m_max=100)
    assert not bad.ok and bad.first_failure == 12


def test_min_interval_constant_anchors():
    assert min_interval_constant([6]) == 1.75
    assert min_interval_constant(range(2, 101)) == 4.25
    with pytest.raises(RuntimeError, match="no passing constant"):
        min_interval_constant([2], limit=1.0)


def test_coprime_near_half_frozen_map():
    assert {n: coprime_near_half(n) for n in range(3, 13)} == {
        3: 1, 4: 1, 5: 2, 6: 1, 7: 3, 8: 3, 9: 4, 10: 3, 11: 5, 12: 5}


def test_coprime_near_half_matches_bruteforce():
    for n in range(3, 500):
        best = max(a for a in range(1, n // 2 + 1) if math.gcd(a, n) == 1)
        assert coprime_near_half(n) == best
        # Sixth-of-n margin used by the shift-graph girth argument.
        assert 6 * min(best, n - best) >= n


def test_coprime_near_half_array_matches_scalar():
    ns, vals = coprime_near_half_array(300)
    assert ns[0] == 3
    scalar = np.array([coprime_near_half(int(n)) for n in ns])
    assert np.array_equal(vals, scalar)


def test_crt_shift_anchors():
    assert crt_shift(3, 4) == 7
    assert crt_shift(3, 5) == 11
    assert crt_shift(4, 5) == 17
    assert crt_shift(5, 7) == 29


def test_crt_shift_congruences_on_grid():
    for n in range(3, 13):
        for k in range(n + 1, 41):
            if math.gcd(n, k) != 1:
                continue
            c = crt_shift(n, k)
            assert 1 <= c < n * k
            assert math.gcd(c, n * k) == 1
            # On each side c inverts the product of the opposite modulus
            # and that side's near-half residue.
            assert c * (n % k) * (coprime_near_half(k) % k) % k == 1
            assert c * (k % n) * (coprime_near_half(n) % n) % n == 1


def test_crt_shift_rejects_common_factor():
    with pytest.raises(ValueError):
        crt_shift(4, 6)


def test_coprime_sequence_floor_n_anchor():
    seq = coprime_sequence(3, "floor_n", 8)
    assert seq.terms == (4, 5, 7, 8, 10, 11, 13, 14)
    assert seq.ratio_bound == 1.4
    seq2 = coprime_sequence(2, "floor_n", 4)
    assert seq2.terms == (3, 5, 7, 9)
    assert seq2.ratio_bound == 5.0 / 3.0


def test_coprime_sequence_floor_log2():
    seq = coprime_sequence(10, "floor_log2", 3)
    assert seq.floor == math.log(10) ** 2
    assert all(math.gcd(t, 10) == 1 for t in seq.terms)
    assert seq.terms[0] >= seq.floor
    assert seq.terms[0] - 1 < seq.floor or math.gcd(seq.terms[0] - 1, 10) != 1


def test_coprime_sequence_validation():
    with pytest.raises(ValueError, match="variant"):
        coprime_sequence(3, "floor_sqrt", 2)
    with pytest.raises(ValueError):
        coprime_sequence(0, "floor_n", 2)
    with pytest.raises(ValueError):
        coprime_sequence(3, "floor_n", 0)


def test_genus_from_terms():
    assert genus_from_terms(1, (1,)) == (6,)
    assert genus_from_terms(2, (3, 5, 7, 9)) == (35, 59, 83, 107)
    assert genus_from_terms(3, (4,)) == (3 * 23 + 1,)
    with pytest.raises(ValueError):
        genus_from_terms(0, (1,))
    with pytest.raises(ValueError):
        genus_from_terms(2, (0,))
