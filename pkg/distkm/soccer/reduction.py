import logging

import numpy as np

from distkm.geometry import Dataset, CenterSet, assign
from distkm.blackbox import BlackBox, WeightedDataset
from distkm.simnet import Network, MachineState, machine_step


logger = logging.getLogger(__name__)


@machine_step
def machine_assignment_counts(machine: MachineState,
                              centers: CenterSet) -> np.ndarray:
    """Counts how many original points of the machine each center serves."""

    machine.charge(len(machine.original) * len(centers))
    if len(machine.original) == 0:
        return np.zeros(len(centers), dtype=np.int64)

    labels = assign(machine.original, centers)
    return np.bincount(labels, minlength=len(centers))


def center_weights(network: Network, centers: CenterSet) -> np.ndarray:
    """Broadcasts `centers` and sums the assignment counts of all machines.

    Every original point is counted once, so the weights sum to `n`.
    """

    network.broadcast(centers)
    counts = network.timed_machine_step(
        machine_assignment_counts(centers=centers))
    gathered = network.gather_scalars(counts)
    return np.sum(gathered, axis=0)


def reduce_to_k(network: Network,
                c_out: CenterSet,
                k: int,
                blackbox: BlackBox,
                rng: np.random.Generator) -> CenterSet:
    """Reduces accumulated centers to at most `k` by weighted clustering.

    Centers are weighted by the number of original points they serve, and
    centers serving no point are dropped before the weighted centers are
    clustered. The extra round is ledgered under the `reduction` phase.

    Args:
        network: The network holding the original points.
        c_out: The accumulated centers, not empty.
        k: The number of centers to reduce to.
        blackbox: The centralized clustering algorithm.
        rng: The coordinator's generator.

    Returns:
        `c_out` itself when it has at most `k` centers, otherwise at most
        `k` new centers.
    """

    c_out.require_non_empty()
    if len(c_out) <= k:
        return c_out

    network.open_round('reduction')
    weights = center_weights(network, c_out)

    with network.coordinator_step():
        used = weights > 0
        weighted = WeightedDataset(Dataset(c_out.centers[used], dim=c_out.dim),
                                   weights[used])
        reduced = blackbox.cluster(weighted, k, rng)

    logger.info('Reduced %d centers (%d serving points) to %d.',
                len(c_out), int(np.sum(used)), len(reduced))
    return reduced
