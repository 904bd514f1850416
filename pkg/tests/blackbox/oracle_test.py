import numpy as np
import pytest
from pytest import mark

from distkm.geometry import Dataset, cost
from distkm.blackbox import BlackBoxConfig, ClusterMode, KMeansBlackBox, \
    brute_force_optimal, empirical_beta, InstanceTooLargeError


@mark.parametrize("points, k, expected_cost, expected_centers", [
    ([[0], [1], [10]], 2, 1.0, [{0.0, 10.0}, {1.0, 10.0}]),
    ([[0], [4], [5]], 2, 1.0, [{0.0, 4.0}, {0.0, 5.0}]),
    ([[0], [4], [5]], 3, 0.0, [{0.0, 4.0, 5.0}]),
    ([[0], [4], [5]], 7, 0.0, [{0.0, 4.0, 5.0}]),
])
def test_brute_force_optimal_return_value(points, k, expected_cost,
                                          expected_centers):
    """Test that `brute_force_optimal` finds the optimal subset."""

    centers, value = brute_force_optimal(Dataset(points), k)

    assert value == expected_cost
    assert set(centers.centers[:, 0].tolist()) in expected_centers


def test_brute_force_optimal_raising_error():
    """Test that `brute_force_optimal` refuses instances above its limit."""

    with pytest.raises(InstanceTooLargeError):
        brute_force_optimal(Dataset(np.zeros((21, 2))), 2)


def test_black_box_is_never_better_than_the_optimum():
    """Test that medoid-mode clustering is never cheaper than the optimum
    with centers from the data, and within a factor two on nearly all
    instances."""

    rng = np.random.default_rng(10)
    box = KMeansBlackBox(BlackBoxConfig(mode=ClusterMode.MEDOID, n_init=5))

    close = 0
    for _ in range(100):
        n = int(rng.integers(2, 13))
        k = int(rng.integers(1, 4))
        data = Dataset(rng.uniform(-5, 5, size=(n, 2)))

        _, optimal = brute_force_optimal(data, k)
        found = cost(data, box.cluster(data, k, rng))

        assert found >= optimal - 1e-9
        close += found <= 2 * optimal + 1e-12

    assert close >= 95


def test_empirical_beta_is_finite_on_tiny_instances():
    """Test that the empirical approximation factor is at least one and
    finite."""

    rng = np.random.default_rng(11)
    instances = [(Dataset(rng.normal(size=(10, 2))), 3) for _ in range(20)]
    box = KMeansBlackBox(BlackBoxConfig(mode=ClusterMode.MEDOID))

    beta = empirical_beta(box, instances, rng)

    assert 1.0 <= beta < float('inf')
