import numpy as np
from pytest import mark

from distkm.geometry import Dataset
from distkm.simnet import TimingMode
from distkm.kmeans_parallel import KmppParams, run_kmeans_parallel


def _blobs(n=2000, clusters=10, seed=0):
    rng = np.random.default_rng(seed)
    centers = rng.uniform(0, 100, size=(clusters, 2))
    labels = rng.integers(0, clusters, size=n)
    return Dataset(centers[labels] + rng.normal(size=(n, 2)))


@mark.parametrize("rounds", [1, 2, 3, 4, 5])
def test_candidates_grow_by_l_per_round(rounds):
    """Test that `r` rounds select exactly `1 + r * l` candidates."""

    params = KmppParams(k=25, rounds=rounds)
    centers, metrics = run_kmeans_parallel(_blobs(), params, 4, seed=rounds)

    assert metrics.output_size == 1 + rounds * 50
    assert len(set(map(tuple, metrics.candidates.centers.tolist()))) == \
        1 + rounds * 50
    assert len(centers) == 25
    assert len(metrics.phis) == rounds


def test_zero_rounds_keep_the_initial_point():
    """Test that without rounds the single initial point is the output."""

    centers, metrics = run_kmeans_parallel(_blobs(), KmppParams(k=5, rounds=0),
                                           3, seed=1)

    assert metrics.output_size == 1
    assert centers is metrics.candidates
    assert metrics.ledger.count('reduction') == 0


def test_selection_stops_when_points_run_out():
    """Test that no point is selected twice once every point is taken."""

    data = Dataset(np.arange(10.0).reshape(10, 1))
    _, metrics = run_kmeans_parallel(data, KmppParams(k=2, rounds=5,
                                                      oversampling=4), 2)

    assert sorted(metrics.candidates.centers[:, 0].tolist()) == \
        [float(i) for i in range(10)]


def test_ledger_of_the_selection_rounds():
    """Test that every round broadcasts the current candidates and receives
    `l` points."""

    params = KmppParams(k=5, rounds=3)
    _, metrics = run_kmeans_parallel(_blobs(), params, 4, seed=2)
    seeding = [r for r in metrics.ledger.rounds if r.phase == 'seeding']

    assert [r.points_broadcast for r in seeding] == [1, 11, 21]
    assert [r.points_to_coordinator for r in seeding] == [10, 10, 10]
    assert metrics.ledger.total('init').points_to_coordinator == 1
    assert metrics.ledger.count('reduction') == 1


def test_phi_decreases_over_rounds():
    """Test that the candidates' cost never grows from round to round."""

    _, metrics = run_kmeans_parallel(_blobs(), KmppParams(k=10, rounds=4), 4,
                                     seed=3)

    assert all(a >= b for a, b in zip(metrics.phis, metrics.phis[1:]))


def test_run_is_independent_of_workers():
    """Test that the number of workers does not change the results."""

    params = KmppParams(k=10, rounds=3)
    a, ma = run_kmeans_parallel(_blobs(), params, 5, seed=4, workers=1,
                                timing=TimingMode.WORK)
    b, mb = run_kmeans_parallel(_blobs(), params, 5, seed=4, workers=3,
                                timing=TimingMode.WORK)

    assert np.array_equal(a.centers, b.centers)
    assert ma.ledger.rounds == mb.ledger.rounds
    assert ma.timer.machine_time == mb.timer.machine_time
    assert ma.final_cost == mb.final_cost


def test_cost_does_not_grow_with_rounds():
    """Test that the median cost over seeds does not grow with the number of
    rounds."""

    data = _blobs()

    def median_cost(rounds):
        params = KmppParams(k=10, rounds=rounds)
        return np.median([
            run_kmeans_parallel(data, params, 4, seed=seed)[1].final_cost
            for seed in range(20)
        ])

    assert median_cost(3) <= median_cost(1)
