import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

import numpy as np
from numpy.random import SeedSequence

from distkm.geometry import Dataset, CenterSet, cost
from distkm.blackbox import BlackBox, BlackBoxConfig, KMeansBlackBox
from distkm.simnet import CommLedger, Network, PartitionStrategy, \
    RoundTimer, TimingMode
from distkm.soccer import reduce_to_k, machine_count
from distkm.kmeans_parallel.params import KmppParams
from distkm.kmeans_parallel.selection import machine_seeding_pass, \
    machine_send_selected, machine_send_initial, select_global, \
    choose_machine


logger = logging.getLogger(__name__)


@dataclass
class KmppMetrics:
    """What a run of the seeding baseline measured.

    Attributes:
        rounds: The number of selection rounds.
        candidates: The selected points before the reduction.
        phis: The cost of the dataset with the candidates of every round,
            measured at the start of the round.
        final_cost: The cost of the dataset with the reduced centers.
        ledger: The communication ledger.
        timer: The round timer.
    """

    rounds: int
    candidates: CenterSet
    ledger: CommLedger
    timer: RoundTimer
    phis: List[float] = field(default_factory=list)
    final_cost: float = 0.0

    @property
    def output_size(self) -> int:
        return len(self.candidates)


def run_kmeans_parallel_on_network(network: Network,
                                   params: KmppParams,
                                   blackbox: BlackBox,
                                   rng: np.random.Generator
                                   ) -> Tuple[CenterSet, KmppMetrics]:
    """Selects candidates round by round and reduces them to `k` centers.

    The first candidate is a uniformly random point. In every round the
    candidates are broadcast, each machine keys its points by their squared
    distance to the candidates, and the `l` best keys overall join the
    candidates. This draws `l` new points with probability proportional to
    the squared distance, without replacement, so after `r` rounds there are
    exactly `1 + r * l` candidates as long as enough points exist.
    """

    network.open_round('init')
    sizes = network.gather_scalars(network.timed_machine_step(machine_count))
    with network.coordinator_step():
        chosen = choose_machine(np.concatenate(sizes), rng)
    network.broadcast(scalars=[chosen])
    candidates = network.gather(
        network.timed_machine_step(machine_send_initial(chosen=chosen)))
    centers = CenterSet(candidates.points, dim=network.dim)

    phis = []
    for index in range(1, params.rounds + 1):
        network.open_round('seeding')
        network.broadcast(centers, scalars=[params.l])

        reports = network.timed_machine_step(
            machine_seeding_pass(centers=centers, l=params.l))
        network.ledger.record_gather(
            scalars=sum(report.scalars for report in reports.values()))

        with network.coordinator_step():
            phis.append(float(sum(report.phi for report in reports.values())))
            counts = select_global(reports, params.l)

        network.broadcast(scalars=list(counts.values()))
        selected = network.gather(network.timed_machine_step(
            machine_send_selected(counts=counts)))
        centers = centers.union(CenterSet(selected.points, dim=network.dim))

        logger.info('Round %d: phi=%.6g, selected %d, %d candidates.',
                    index, phis[-1], len(selected), len(centers))

    reduced = reduce_to_k(network, centers, params.k, blackbox, rng)

    metrics = KmppMetrics(rounds=params.rounds,
                          candidates=centers,
                          ledger=network.ledger,
                          timer=network.timer,
                          phis=phis)
    return reduced, metrics


def run_kmeans_parallel(data: Dataset,
                        params: KmppParams,
                        m: int,
                        blackbox: Optional[BlackBox] = None,
                        seed: int = 0,
                        strategy: Union[PartitionStrategy, str] = PartitionStrategy.UNIFORM_RANDOM,
                        gamma: float = 1.0,
                        workers: int = 1,
                        timing: Union[TimingMode, str] = TimingMode.WALL
                        ) -> Tuple[CenterSet, KmppMetrics]:
    """Partitions `data` among `m` machines and runs the seeding baseline.

    Seeds are split exactly as for `run_soccer`, so both algorithms see the
    same partition for the same seed.

    Returns:
        The reduced centers and the run's metrics, whose `final_cost` is the
        cost of `data` with the reduced centers.
    """

    if len(data) == 0:
        raise ValueError('Cannot cluster an empty dataset.')
    if blackbox is None:
        blackbox = KMeansBlackBox(BlackBoxConfig(target_k=params.k))

    partition_seed, coordinator_seed = SeedSequence(seed).spawn(2)
    network = Network.from_dataset(data, m, strategy, partition_seed, gamma,
                                   workers, timing)

    rng = np.random.default_rng(coordinator_seed)
    reduced, metrics = run_kmeans_parallel_on_network(network, params,
                                                      blackbox, rng)
    metrics.final_cost = cost(data, reduced)

    logger.info('Finished %d rounds with %d candidates, cost %.6g.',
                metrics.rounds, metrics.output_size, metrics.final_cost)
    return reduced, metrics
