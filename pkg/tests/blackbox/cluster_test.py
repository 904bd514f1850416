import numpy as np
import pytest

from distkm.geometry import Dataset, cost
from distkm.blackbox import BlackBoxConfig, ClusterMode, KMeansBlackBox, \
    WeightedDataset, cluster, brute_force_optimal, EmptyDatasetError


def test_cluster_returns_distinct_points_when_k_is_large():
    """Test that at most `k` distinct points are returned as they are."""

    data = Dataset([[0, 0], [0, 0], [3, 3]])
    centers = cluster(data, 5, BlackBoxConfig(), np.random.default_rng(0))

    assert len(centers) == 2
    assert cost(data, centers) == 0.0


def test_cluster_is_deterministic_given_the_seed():
    """Test that the same seed gives bitwise-identical centers."""

    points = np.random.default_rng(6).normal(size=(300, 4))
    data = Dataset(points)

    a = cluster(data, 5, BlackBoxConfig(), np.random.default_rng(42))
    b = cluster(data, 5, BlackBoxConfig(), np.random.default_rng(42))

    assert np.array_equal(a.centers, b.centers)


def test_cluster_close_to_brute_force_on_duplicated_instance():
    """Test that the black box is within 1.2 of the optimum on a 200-point
    instance made of 20 locations repeated ten times."""

    rng = np.random.default_rng(7)
    locations = rng.uniform(0, 10, size=(20, 2))
    data = Dataset(np.tile(locations, (10, 1)))

    _, optimal = brute_force_optimal(Dataset(locations), 3)
    found = cost(data, cluster(data, 3, BlackBoxConfig(), rng))

    assert found <= 1.2 * 10 * optimal


def test_cluster_cost_decreases_with_k():
    """Test that the median cost over seeds does not grow with `k`."""

    data = Dataset(np.random.default_rng(8).normal(size=(200, 2)))

    def median_cost(k):
        return np.median([
            cost(data, cluster(data, k, BlackBoxConfig(),
                               np.random.default_rng(seed)))
            for seed in range(20)
        ])

    assert median_cost(4) <= median_cost(3) <= median_cost(2)


def test_cluster_uses_weights():
    """Test that a heavy point pulls the single center towards it."""

    data = WeightedDataset(Dataset([[0.0], [10.0]]), [9.0, 1.0])
    centers = cluster(data, 1, BlackBoxConfig(), np.random.default_rng(0))

    assert centers.centers.tolist() == [[1.0]]


def test_cluster_medoid_mode_returns_members():
    """Test that medoid mode only returns input points."""

    points = np.random.default_rng(9).normal(size=(50, 2))
    config = BlackBoxConfig(mode=ClusterMode.MEDOID)
    centers = cluster(Dataset(points), 4, config, np.random.default_rng(1))

    for center in centers.centers:
        assert np.any(np.all(points == center, axis=1))


def test_cluster_raising_error():
    """Test that `cluster` rejects empty data and a nonpositive `k`."""

    with pytest.raises(EmptyDatasetError):
        cluster(Dataset.empty(2), 2, BlackBoxConfig(), np.random.default_rng())
    with pytest.raises(ValueError):
        cluster(Dataset([[0, 0]]), 0, BlackBoxConfig(), np.random.default_rng())


def test_black_box_defaults_to_target_k():
    """Test that `KMeansBlackBox.cluster` uses `target_k` when `k` is
    omitted."""

    box = KMeansBlackBox(BlackBoxConfig(target_k=3))
    data = Dataset([[0], [10], [20], [30], [40]])

    assert len(box.cluster(data, rng=np.random.default_rng(0))) == 3


def test_black_box_config_raising_error():
    """Test that `BlackBoxConfig` validates its fields."""

    with pytest.raises(ValueError, match='target_k'):
        BlackBoxConfig(target_k=0)
    with pytest.raises(ValueError, match='n_init'):
        BlackBoxConfig(n_init=0)
    with pytest.raises(ValueError, match='convergence_tol'):
        BlackBoxConfig(convergence_tol=-1.0)
    assert BlackBoxConfig(mode='medoid').mode is ClusterMode.MEDOID
