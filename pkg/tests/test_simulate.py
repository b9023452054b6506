import csv
import io

import pytest

from constacyclic.code import is_codeword
from constacyclic.simulate import (
    CSV_HEADER,
    SimConfig,
    make_trial,
    simulate,
    to_csv,
    trial_rng,
)


def test_trial_streams_are_independent_of_order(code):
    a = [make_trial(code, 2, trial_rng(1, 2, k)) for k in range(5)]
    b = [make_trial(code, 2, trial_rng(1, 2, k)) for k in reversed(range(5))][::-1]
    assert a == b
    assert make_trial(code, 2, trial_rng(1, 2, 0)) != make_trial(code, 2, trial_rng(2, 2, 0))


def test_trials_have_requested_weight(code):
    for k in range(30):
        c, e = make_trial(code, k % 6, trial_rng(0, k % 6, k))
        assert is_codeword(code, c)
        assert e.weight() == k % 6 and e.is_base()


def test_counts_partition_trials(code):
    results = simulate(code, SimConfig(trials=25, weights=[0, 1, 2], seed=3))
    for res in results:
        assert res.trials == 25
        assert res.corrected + res.miscorrected + res.failures == 25
    assert results[0].corrected == 25 and results[0].mean_solve_ops == 0
    assert results[1].corrected == 25


def test_csv_layout_and_determinism(code):
    config = SimConfig(trials=10, weights=[1, 3], seed=8)
    text = to_csv(simulate(code, config))
    assert text == to_csv(simulate(code, config))
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_HEADER
    assert [r[0] for r in rows[1:]] == ["1", "3"]
    assert all(len(r[5].split(".")[1]) == 2 for r in rows[1:])


@pytest.mark.parametrize("config", [SimConfig(0, [1]), SimConfig(5, [21]), SimConfig(5, [-1])])
def test_bad_configs(code, config):
    with pytest.raises(ValueError):
        config.validate(code)


def test_weight_one_is_within_the_empirical_radius(code):
    (res,) = simulate(code, SimConfig(trials=200, weights=[1], seed=2, method="time"))
    assert res.corrected == 200
    (res,) = simulate(code, SimConfig(trials=20, weights=[1], seed=2, method="exhaustive"))
    assert res.corrected == 20
