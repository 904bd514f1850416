import numpy as np
import pytest

from distkm.kmeans_parallel import KmppParams, SeedingReport, weighted_keys, \
    top_keys, select_global, choose_machine


def test_kmpp_params_defaults_oversampling_to_twice_k():
    """Test that the oversampling defaults to `2 * k`."""

    assert KmppParams(k=25).l == 50
    assert KmppParams(k=25, oversampling=7).l == 7


def test_kmpp_params_raising_error():
    """Test that invalid parameters are rejected."""

    with pytest.raises(ValueError, match='clusters'):
        KmppParams(k=1)
    with pytest.raises(ValueError, match='rounds'):
        KmppParams(k=5, rounds=-1)
    with pytest.raises(ValueError, match='oversampling'):
        KmppParams(k=5, oversampling=0)


def test_weighted_keys_rank_zero_weights_last():
    """Test that points of zero weight get the lowest primary key."""

    primary, secondary = weighted_keys(np.array([0.0, 1.0, 0.0, 5.0]),
                                       np.random.default_rng(0))

    assert np.isneginf(primary[[0, 2]]).all()
    assert np.isfinite(primary[[1, 3]]).all()
    assert ((0 <= secondary) & (secondary < 1)).all()
    assert set(top_keys(primary, secondary, 2).tolist()) == {1, 3}


def test_top_keys_breaks_ties_by_the_secondary_key():
    """Test that equal primary keys are ordered by the secondary key."""

    primary = np.array([-np.inf, -np.inf, -np.inf])
    secondary = np.array([0.2, 0.9, 0.5])

    assert top_keys(primary, secondary, 3).tolist() == [1, 2, 0]
    assert top_keys(primary, secondary, 0).tolist() == []


def test_weighted_keys_select_in_proportion_to_weights():
    """Test that the best key follows the squared-distance distribution."""

    weights = np.array([1.0, 4.0, 0.0, 9.0, 2.0])
    probabilities = weights / weights.sum()

    rng = np.random.default_rng(1)
    draws = 10_000
    counts = np.zeros(len(weights))
    for _ in range(draws):
        counts[top_keys(*weighted_keys(weights, rng), 1)[0]] += 1

    sigma = np.sqrt(probabilities * (1 - probabilities) / draws)
    assert counts[2] == 0
    assert np.all(np.abs(counts / draws - probabilities) <= 4 * sigma + 1e-12)


def test_select_global_takes_the_best_keys_of_all_machines():
    """Test that the global selection counts the winners per machine."""

    reports = {
        0: SeedingReport(1.0, np.array([-0.1, -0.5]), np.array([0.0, 0.0])),
        1: SeedingReport(2.0, np.array([-0.2, -0.3]), np.array([0.0, 0.0])),
        2: SeedingReport(0.0, np.empty(0), np.empty(0)),
    }

    assert select_global(reports, 3) == {0: 1, 1: 2, 2: 0}
    assert select_global(reports, 10) == {0: 2, 1: 2, 2: 0}
    assert reports[0].scalars == 5


def test_choose_machine_skips_empty_machines():
    """Test that a machine without points is never chosen."""

    rng = np.random.default_rng(2)
    assert {choose_machine([0, 3, 0, 1], rng) for _ in range(200)} == {1, 3}
