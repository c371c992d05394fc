import io

import pandas as pd
import pytest

from SecretaryLab.src.core import analysis
from SecretaryLab.src.core.errors import ParameterError
from SecretaryLab.src.models import Objective, RewardHorizon, RuleParams
from SecretaryLab.src.services import sweep


def test_rank_sweep_over_k():
    rows = sweep.sweep(50, "k", l=1)
    assert len(rows) == 49
    assert [row.k for row in rows] == list(range(1, 50))
    assert all(row.objective is Objective.MIN_RANK and row.d is None for row in rows)
    values = [float(row.value) for row in rows]
    best = values.index(min(values)) + 1
    assert best in (6, 7)
    # U-shaped: falls to the minimum then rises
    assert values[: best - 1] == sorted(values[: best - 1], reverse=True)
    assert values[best - 1 :] == sorted(values[best - 1 :])


def test_reward_sweep_over_l():
    rows = sweep.sweep(12, "l", k=5, horizon=RewardHorizon(d=2))
    assert [(row.k, row.l) for row in rows] == [(5, l) for l in range(1, 6)]
    assert all(row.objective is Objective.MAX_REWARD and row.d == 2 for row in rows)


def test_sweep_range_and_errors():
    rows = sweep.sweep(20, "k", l=2, start=5, stop=9)
    assert [row.k for row in rows] == [5, 6, 7, 8, 9]
    with pytest.raises(ParameterError):
        sweep.sweep(20, "k")
    with pytest.raises(ParameterError):
        sweep.sweep(20, "l")
    with pytest.raises(ParameterError):
        sweep.sweep(20, "n", k=3)
    with pytest.raises(ParameterError):
        sweep.sweep(20, "k", l=2, start=9, stop=5)
    with pytest.raises(ValueError):
        sweep.sweep(20, "k", l=2, start=1)


def test_csv_round_trip():
    rows = sweep.sweep(30, "k", l=2)
    buffer = io.StringIO()
    sweep.write_csv(rows, buffer)
    text = buffer.getvalue()
    assert text.splitlines()[0] == "n,k,l,d,value"

    frame = pd.read_csv(io.StringIO(text), float_precision="round_trip")
    assert len(frame) == 29
    assert frame["d"].isna().all()
    for record in frame.itertuples(index=False):
        exact = analysis.expected_rank(RuleParams(n=record.n, k=record.k, l=record.l))
        assert record.value == float(exact)


def test_csv_reward_column():
    rows = sweep.sweep(8, "k", l=1, horizon=RewardHorizon(d=2))
    frame = sweep.rows_to_frame(rows)
    assert str(frame["d"].dtype) == "Int64"
    assert list(frame.columns) == ["n", "k", "l", "d", "value"]
    first = RuleParams(n=8, k=1, l=1)
    expected = analysis.expected_reward(first, RewardHorizon(d=2))
    assert float(frame["value"][0]) == float(expected)
