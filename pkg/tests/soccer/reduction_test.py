import numpy as np

from distkm.geometry import Dataset, CenterSet
from distkm.blackbox import KMeansBlackBox
from distkm.simnet import Network, PartitionStrategy
from distkm.soccer import reduce_to_k, center_weights


def _network():
    points = [[0.0, 0.0]] * 10 + [[100.0, 0.0]]
    return Network.from_dataset(Dataset(points), 2,
                                PartitionStrategy.CONTIGUOUS)


def test_reduce_to_k_keeps_small_center_sets():
    """Test that at most `k` centers are returned unchanged without any
    communication."""

    network = _network()
    centers = CenterSet([[0.0, 0.0], [100.0, 0.0]])

    assert reduce_to_k(network, centers, 2, KMeansBlackBox(),
                       np.random.default_rng(0)) is centers
    assert network.ledger.count() == 0


def test_reduce_to_k_collapses_coincident_centers():
    """Test that two coincident centers collapse and a far singleton is
    kept."""

    network = _network()
    centers = CenterSet([[0.0, 0.0], [0.0, 0.0], [100.0, 0.0]])

    reduced = reduce_to_k(network, centers, 2, KMeansBlackBox(),
                          np.random.default_rng(0))

    assert sorted(map(tuple, reduced.centers.tolist())) == \
        [(0.0, 0.0), (100.0, 0.0)]

    traffic = network.ledger.total('reduction')
    assert network.ledger.count('reduction') == 1
    assert traffic.points_broadcast == 3
    assert traffic.scalars_to_coordinator == 6
    assert traffic.points_to_coordinator == 0


def test_center_weights_count_every_point_once():
    """Test that the weights sum to the number of original points."""

    network = _network()
    weights = center_weights(network,
                             CenterSet([[0.0, 0.0], [0.0, 0.0], [90.0, 0.0]]))

    assert weights.tolist() == [10, 0, 1]
    assert weights.sum() == 11


def test_center_weights_use_original_points():
    """Test that removed points still count towards the weights."""

    network = _network()
    for machine in network.machines:
        machine.surrender()

    weights = center_weights(network, CenterSet([[1.0, 0.0]]))

    assert weights.tolist() == [11]
