from collections import Counter
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from SecretaryLab.src.core import analysis
from SecretaryLab.src.core.errors import ParameterError
from SecretaryLab.src.models import RewardHorizon, RuleParams
from SecretaryLab.src.services.oracle import enumerate_outcomes


def rule(n, k, l):
    return RuleParams(n=n, k=k, l=l)


def all_rules(n_max, n_min=2):
    for n in range(n_min, n_max + 1):
        for k in range(1, n):
            for l in range(1, k + 1):
                yield rule(n, k, l)


@st.composite
def rule_params(draw, n_max=40):
    n = draw(st.integers(min_value=2, max_value=n_max))
    k = draw(st.integers(min_value=1, max_value=n - 1))
    l = draw(st.integers(min_value=1, max_value=k))
    return rule(n, k, l)


def test_p_success_examples():
    assert analysis.p_success(rule(3, 1, 1), 2, 1) == Fraction(1, 3)
    assert analysis.p_success(rule(3, 1, 1), 3, 1) == Fraction(1, 6)
    assert analysis.p_success(rule(5, 2, 1), 2, 1) == Fraction(3, 10)


def test_p_success_rejects_out_of_range():
    with pytest.raises(ParameterError):
        analysis.p_success(rule(3, 1, 1), 1, 1)
    with pytest.raises(ParameterError):
        analysis.p_success(rule(3, 1, 1), 2, 2)


def test_p_fail_examples():
    assert analysis.p_fail(rule(3, 1, 1), 2) == Fraction(1, 6)
    assert analysis.p_fail(rule(3, 1, 1), 3) == Fraction(1, 6)
    assert analysis.p_fail(rule(4, 3, 2), 3) == Fraction(1, 4)
    with pytest.raises(ParameterError):
        analysis.p_fail(rule(4, 3, 2), 2)


def test_success_probability():
    assert analysis.success_probability(rule(3, 1, 1)) == Fraction(2, 3)
    for params in all_rules(12):
        fail_mass = sum(
            analysis.p_fail(params, s) for s in range(params.l + 1, params.n + 1)
        )
        assert analysis.success_probability(params) == 1 - fail_mass


def test_rank_distribution_examples():
    dist = analysis.rank_distribution(rule(3, 1, 1))
    assert dist.probabilities == {1: Fraction(1, 2), 2: Fraction(1, 3), 3: Fraction(1, 6)}
    assert analysis.rank_distribution(rule(2, 1, 1)).probabilities == {
        1: Fraction(1, 2),
        2: Fraction(1, 2),
    }


def test_rank_distribution_is_normalised_and_matches_means():
    for params in all_rules(14):
        dist = analysis.rank_distribution(params)
        assert dist.total() == 1
        assert dist.mean() == analysis.expected_rank(params)
        for d in range(1, params.n + 1):
            assert dist.expected_reward(d) == analysis.expected_reward(
                params, RewardHorizon(d=d)
            )


def test_expected_rank_examples():
    assert analysis.expected_rank(rule(3, 1, 1)) == Fraction(5, 3)
    assert analysis.expected_rank(rule(2, 1, 1)) == Fraction(3, 2)
    assert analysis.expected_rank(rule(100, 9, 1)) == Fraction(1919, 200)


def test_expected_reward_examples():
    assert analysis.expected_reward(rule(3, 1, 1), RewardHorizon(d=1)) == Fraction(3, 2)
    assert analysis.expected_reward(rule(3, 1, 1), RewardHorizon(d=2)) == Fraction(13, 6)
    assert analysis.expected_reward(rule(4, 2, 2), RewardHorizon(d=1)) == Fraction(4, 3)
    with pytest.raises(ParameterError):
        analysis.expected_reward(rule(3, 1, 1), RewardHorizon(d=4))


def test_expected_reward_closed_examples():
    assert analysis.expected_reward_closed(rule(3, 1, 1), 1) == Fraction(3, 2)
    assert analysis.expected_reward_closed(rule(3, 1, 1), 2) == Fraction(13, 6)
    assert analysis.expected_reward_closed(rule(4, 2, 2), 1) == Fraction(4, 3)
    with pytest.raises(ParameterError):
        analysis.expected_reward_closed(rule(4, 2, 2), 3)


def test_closed_forms_match_general_sum():
    for params in all_rules(30):
        for d in (1, 2):
            assert analysis.expected_reward_closed(params, d) == analysis.expected_reward(
                params, RewardHorizon(d=d)
            )


@pytest.mark.slow
@pytest.mark.parametrize("n", range(31, 201))
def test_closed_forms_match_general_sum_up_to_200(n):
    for params in all_rules(n, n_min=n):
        for d in (1, 2):
            assert analysis.expected_reward_closed(params, d) == analysis.expected_reward(
                params, RewardHorizon(d=d)
            )


def test_complement_examples():
    assert analysis.complement_check(rule(3, 1, 1))
    assert analysis.complement_check(rule(2, 1, 1))
    assert analysis.complement_check(rule(20, 7, 3))


@settings(deadline=None)
@given(rule_params())
def test_complement_holds(params):
    assert analysis.complement_check(params)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(2, 201))
def test_complement_holds_up_to_200(n):
    for params in all_rules(n, n_min=n):
        assert analysis.complement_check(params)


@settings(deadline=None)
@given(rule_params())
def test_reward_is_monotone_in_horizon(params):
    values = [
        analysis.expected_reward(params, RewardHorizon(d=d))
        for d in range(1, params.n + 1)
    ]
    assert values == sorted(values)
    assert all(0 <= value <= params.n for value in values)


@settings(deadline=None)
@given(rule_params(n_max=120))
def test_expected_rank_lies_within_pool(params):
    assert 1 <= analysis.expected_rank(params) <= params.n


def test_sequence_count_matches_enumeration():
    for params in all_rules(5):
        joint = Counter(
            (o.t, o.j, o.s) for _, o in enumerate_outcomes(params) if o.success
        )
        n, k, l = params.n, params.k, params.l
        for t in range(l + 1, n - k + l + 1):
            for j in range(1, n - k + 1):
                for s in range(1, t):
                    assert joint[(t, j, s)] == analysis.sequence_count(params, t, j)


def test_sequence_count_sums_to_success_probability():
    for params in all_rules(8):
        n, k, l = params.n, params.k, params.l
        for t in range(l + 1, n - k + l + 1):
            per_s = sum(analysis.sequence_count(params, t, j) for j in range(1, n))
            assert per_s == analysis.p_success(params, t, 1) * factorial(n)


def test_d1_l1_dominance():
    for n in range(3, 31):
        for k in range(2, n):
            for l in range(2, k + 1):
                assert analysis.check_d1_l1_dominance(n, k, l)
    with pytest.raises(ParameterError):
        analysis.check_d1_l1_dominance(5, 2, 1)
