import logging

import numpy as np
import pytest
from pytest import mark

from distkm.geometry import Dataset, cost
from distkm.blackbox import KMeansBlackBox, BlackBoxConfig, cluster
from distkm.simnet import TimingMode
from distkm.datagen import HardInstanceSpec, gen_hard_instance
from distkm.soccer import SoccerParams, SamplingMode, RoundLimitExceeded, \
    run_soccer, sample_size


CENTERS = np.array([[0.0, 0.0], [10.0, 0.0], [0.0, 10.0]])


def _blobs(n=20_000, seed=0):
    rng = np.random.default_rng(seed)
    labels = rng.integers(0, len(CENTERS), size=n)
    return Dataset(CENTERS[labels] + rng.normal(scale=0.5, size=(n, 2)))


PARAMS = SoccerParams(k=3, delta=0.5, epsilon=0.2)


def test_run_soccer_without_loop_rounds():
    """Test that a dataset within the capacity goes straight to the final
    phase."""

    data = _blobs(200)
    result = run_soccer(data, SoccerParams(k=3), 4, seed=1)

    assert result.loop_rounds == 0
    assert result.total_rounds == 1
    assert result.final_input_size == 200
    assert result.ledger.count('loop') == 0
    assert result.ledger.total('final').points_to_coordinator == 200
    assert len(result.c_out) == 3
    assert result.reduced_centers is result.c_out
    assert result.final_cost == pytest.approx(result.final_phase_cost)


def test_run_soccer_matches_the_black_box_without_loop_rounds():
    """Test that without loop rounds the cost is the black box's cost on the
    whole dataset."""

    data = _blobs(200, seed=7)
    result = run_soccer(data, SoccerParams(k=3), 1, seed=2)
    direct = cluster(data, 3, BlackBoxConfig(target_k=3),
                     np.random.default_rng(0))

    assert result.final_cost == pytest.approx(cost(data, direct), rel=1e-6)


def test_run_soccer_reduces_large_datasets():
    """Test that loop rounds run while the data exceeds the capacity and
    the final centers are good."""

    data = _blobs()
    result = run_soccer(data, PARAMS, 8, seed=3)

    assert result.loop_rounds >= 1
    assert result.round_records[0].n_before == 20_000
    assert result.round_records[-1].remaining_n <= result.constants.eta
    assert len(result.reduced_centers) == 3
    assert result.final_cost <= 1.2 * cost(data, CENTERS)


def test_run_soccer_records_are_consistent():
    """Test the bookkeeping of every loop round."""

    result = run_soccer(_blobs(), PARAMS, 8, seed=4)

    live = 20_000
    for record in result.round_records:
        assert record.n_before == live
        assert record.alpha == pytest.approx(result.constants.eta / live)
        assert record.p1_size == record.p2_size
        assert record.removed_count == len(record.removed_indices)
        assert record.remaining_n == live - record.removed_count
        assert record.psi == pytest.approx(
            record.v * 3 * result.constants.d_k / record.alpha)
        live = record.remaining_n

    assert result.final_input_size == live


@mark.parametrize("mode", list(SamplingMode))
def test_run_soccer_sampling_modes(mode):
    """Test that every sampling mode completes with conserved points."""

    params = SoccerParams(k=3, delta=0.5, epsilon=0.2,
                          sampling_mode=mode)
    result = run_soccer(_blobs(), params, 4, seed=5)
    record = result.round_records[0]

    assert result.loop_rounds >= 1
    if mode is not SamplingMode.BERNOULLI:
        assert record.p1_size == sample_size(record.alpha, record.n_before)


def test_run_soccer_samples_from_tiny_shards():
    """Test that shards holding about two points each still add up to a full
    sample."""

    data = gen_hard_instance(HardInstanceSpec(k=10, z=100)).dataset
    params = SoccerParams(k=10, delta=0.1, epsilon=0.1, capacity_constant=2.0)
    result = run_soccer(data, params, 1000, seed=3)
    record = result.round_records[0]

    assert result.loop_rounds >= 1
    assert record.p1_size == sample_size(record.alpha, 1800) == 199
    assert record.p2_size == 199
    assert sum(r.removed_count for r in result.round_records) + \
        result.final_input_size == 1800


def test_run_soccer_is_independent_of_workers():
    """Test that the number of workers does not change the results."""

    data = _blobs()
    a = run_soccer(data, PARAMS, 6, seed=6, workers=1, timing=TimingMode.WORK)
    b = run_soccer(data, PARAMS, 6, seed=6, workers=4, timing=TimingMode.WORK)

    assert np.array_equal(a.c_out.centers, b.c_out.centers)
    assert np.array_equal(a.reduced_centers.centers, b.reduced_centers.centers)
    assert a.ledger.rounds == b.ledger.rounds
    assert a.timer.machine_time == b.timer.machine_time
    assert a.final_cost == b.final_cost


def test_run_soccer_is_deterministic_given_the_seed():
    """Test that the same seed gives the same run and another seed a
    different one."""

    data = _blobs()
    a = run_soccer(data, PARAMS, 4, seed=8)
    b = run_soccer(data, PARAMS, 4, seed=8)
    c = run_soccer(data, PARAMS, 4, seed=9)

    assert np.array_equal(a.c_out.centers, b.c_out.centers)
    assert not np.array_equal(a.c_out.centers, c.c_out.centers)


def test_run_soccer_raising_round_limit():
    """Test that a run that cannot reach the capacity in time fails."""

    params = SoccerParams(k=3, delta=0.5, epsilon=0.5, capacity_constant=0.1,
                          max_loop_rounds_guard=1)

    with pytest.raises(RoundLimitExceeded) as info:
        run_soccer(_blobs(2000), params, 2, seed=1)

    assert info.value.rounds == 1
    assert info.value.remaining > info.value.capacity


def test_run_soccer_warns_outside_the_guarantee(caplog):
    """Test that a run with fewer than five clusters logs a warning."""

    with caplog.at_level(logging.WARNING, logger='distkm.soccer.runner'):
        run_soccer(_blobs(100), SoccerParams(k=3), 2, seed=1)

    assert 'guarantees assume k >= 5' in caplog.text
