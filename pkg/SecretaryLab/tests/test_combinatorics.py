from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from SecretaryLab.src.core import combinatorics
from SecretaryLab.src.core.errors import ParameterError


def test_binomial_values():
    assert combinatorics.binomial(5, 2) == 10
    assert combinatorics.binomial(4, 0) == 1
    assert combinatorics.binomial(3, 5) == 0
    assert combinatorics.binomial(3, -1) == 0


def test_harmonic_number():
    assert combinatorics.harmonic_number(0) == 0
    assert combinatorics.harmonic_number(4) == Fraction(25, 12)
    with pytest.raises(ParameterError):
        combinatorics.harmonic_number(-1)


def test_harmonic_diff():
    assert combinatorics.harmonic_diff(4, 1) == Fraction(11, 6)
    assert combinatorics.harmonic_diff(3, 1) == Fraction(3, 2)
    assert combinatorics.harmonic_diff(10, 9) == Fraction(1, 9)
    with pytest.raises(ParameterError):
        combinatorics.harmonic_diff(4, 4)


def test_stirling_cycle2():
    assert [combinatorics.stirling_cycle2(n) for n in range(2, 7)] == [1, 3, 11, 50, 274]
    with pytest.raises(ParameterError):
        combinatorics.stirling_cycle2(1)


@pytest.mark.parametrize("n,k,l", [(5, 2, 1), (3, 2, 2), (10, 7, 3)])
def test_subset_identity_examples(n, k, l):
    assert combinatorics.check_subset_identity(n, k, l)


@pytest.mark.parametrize("n,k", [(3, 1), (4, 2), (12, 5)])
def test_harmonic_identity_examples(n, k):
    assert combinatorics.check_harmonic_identity(n, k)


@pytest.mark.parametrize("n,k,l", [(4, 2, 2), (5, 3, 2), (15, 9, 4)])
def test_l2_identity_examples(n, k, l):
    assert combinatorics.check_l2_identity(n, k, l)


def test_identities_hold_on_small_grid():
    for n in range(2, 31):
        for k in range(1, n):
            assert combinatorics.check_harmonic_identity(n, k)
            for l in range(1, k + 1):
                assert combinatorics.check_subset_identity(n, k, l)
                if l >= 2:
                    assert combinatorics.check_l2_identity(n, k, l)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(31, 201))
def test_identities_hold_up_to_200(n):
    for k in range(1, n):
        assert combinatorics.check_harmonic_identity(n, k)
        for l in range(1, k + 1):
            assert combinatorics.check_subset_identity(n, k, l)
            if l >= 2:
                assert combinatorics.check_l2_identity(n, k, l)


def test_smallest_element_identity():
    for n in range(2, 16):
        for k in range(1, n):
            for l in range(1, k + 1):
                for t in range(l + 1, n - k + l + 1):
                    assert combinatorics.check_smallest_element_identity(n, k, l, t)


def test_smallest_element_identity_rejects_bad_t():
    with pytest.raises(ParameterError):
        combinatorics.check_smallest_element_identity(5, 2, 1, 1)


def test_cycle_split_identity():
    for n in range(2, 16):
        for k in range(1, n):
            assert combinatorics.check_cycle_split_identity(n, k)


@given(st.integers(min_value=1, max_value=40), st.integers(min_value=-1, max_value=41))
def test_pascal_rule(n, r):
    assert combinatorics.binomial(n, r) == combinatorics.binomial(
        n - 1, r - 1
    ) + combinatorics.binomial(n - 1, r)


@st.composite
def pool_and_cutoff(draw):
    n = draw(st.integers(min_value=3, max_value=300))
    return n, draw(st.integers(min_value=1, max_value=n - 2))


@given(pool_and_cutoff())
def test_harmonic_diff_drops_one_term(pair):
    n, k = pair
    assert combinatorics.harmonic_diff(n, k) == combinatorics.harmonic_diff(
        n, k + 1
    ) + Fraction(1, k)


@given(st.fractions(), st.fractions())
def test_fraction_sums_undo_exactly(a, b):
    assert (a + b) - b == a
