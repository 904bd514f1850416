import logging
from typing import Optional, Union

import numpy as np
from numpy.random import SeedSequence

from distkm.geometry import Dataset, CenterSet, cost
from distkm.blackbox import BlackBox, BlackBoxConfig, KMeansBlackBox
from distkm.simnet import Network, PartitionStrategy, TimingMode
from distkm.soccer.errors import RoundLimitExceeded
from distkm.soccer.params import SoccerParams, DerivedConstants, \
    SamplingMode, derive_constants
from distkm.soccer.reduction import reduce_to_k
from distkm.soccer.result import RoundRecord, SoccerResult
from distkm.soccer.rounds import machine_sample, machine_remove, \
    machine_count, machine_surrender, coordinator_round, exact_counts, multinomial_counts


logger = logging.getLogger(__name__)


def _loop_round(network: Network,
                index: int,
                live: int,
                params: SoccerParams,
                constants: DerivedConstants,
                blackbox: BlackBox,
                rng: np.random.Generator) -> RoundRecord:
    network.open_round('loop')
    alpha = constants.eta / live

    counts = None
    if params.sampling_mode is SamplingMode.MULTINOMIAL:
        with network.coordinator_step():
            counts = multinomial_counts(network.live_sizes, alpha, rng)
        network.broadcast(scalars=[c for pair in counts.values() for c in pair])
    elif params.sampling_mode is SamplingMode.EXACT_FRACTION:
        with network.coordinator_step():
            counts = exact_counts(network.live_sizes, alpha)
        network.broadcast(scalars=[first for first, _ in counts.values()])
    else:
        network.broadcast(scalars=[alpha])

    samples = network.timed_machine_step(
        machine_sample(alpha=alpha, mode=params.sampling_mode, counts=counts))
    p1 = network.gather({j: pair[0] for j, pair in samples.items()})
    p2 = network.gather({j: pair[1] for j, pair in samples.items()})

    with network.coordinator_step():
        c_iter, v, psi = coordinator_round(p1, p2, constants, blackbox, rng,
                                           alpha)

    network.broadcast(c_iter, scalars=[v])
    removals = network.timed_machine_step(machine_remove(c_iter=c_iter, v=v))

    remaining = int(np.sum(network.gather_scalars(
        network.timed_machine_step(machine_count))))

    removed = list(removals.values())
    return RoundRecord(
        index=index,
        alpha=alpha,
        n_before=live,
        p1_size=len(p1),
        p2_size=len(p2),
        c_iter=c_iter,
        v=v,
        psi=psi,
        removed_count=sum(r.count for r in removed),
        removed_cost=float(sum(r.cost for r in removed)),
        removed_indices=np.concatenate([r.indices for r in removed]),
        remaining_n=remaining,
    )


def run_soccer_on_network(network: Network,
                          params: SoccerParams,
                          blackbox: BlackBox,
                          rng: np.random.Generator,
                          n: Optional[int] = None) -> SoccerResult:
    """Runs the round-reduction loop, the final phase and the reduction on
    an existing network.

    While more than `eta` points are alive, every machine sends two samples
    of an `alpha = eta / N` fraction of its live points. The coordinator
    clusters the first sample into at most `k_plus` centers, derives a
    threshold `v` from the second, and every machine drops the points within
    squared distance `v` of those centers. Once at most `eta` points remain
    they are sent to the coordinator and clustered into `k` centers.

    The returned `final_cost` is left at zero; callers holding the full
    dataset fill it in.

    Raises:
        RoundLimitExceeded: Raised when `params.round_guard` loop rounds do
            not bring the live points down to `eta`.
    """

    n = network.live_count if n is None else n
    constants = derive_constants(params, n)

    if not params.within_guarantee:
        logger.warning('Running with k=%d, the guarantees assume k >= 5.',
                       params.k)
    logger.info('Clustering %d points on %d machines, eta=%.1f, k_plus=%d.',
                n, network.m, constants.eta, constants.k_plus)

    records = []
    c_out = CenterSet.empty(network.dim)
    live = n

    while live > constants.eta:
        if len(records) >= params.round_guard:
            raise RoundLimitExceeded(len(records), live, constants.eta)

        record = _loop_round(network, len(records) + 1, live, params,
                             constants, blackbox, rng)
        records.append(record)
        c_out = c_out.union(record.c_iter)
        live = record.remaining_n

        if record.removed_count == 0:
            logger.warning('Round %d removed no points, %d remain.',
                           record.index, live)
        logger.info('Round %d: alpha=%.4g, |P1|=%d, |C_iter|=%d, v=%.4g, '
                    'removed %d, %d remain.', record.index, record.alpha,
                    record.p1_size, len(record.c_iter), record.v,
                    record.removed_count, live)

    network.open_round('final')
    final = network.gather(network.timed_machine_step(machine_surrender))

    final_centers = CenterSet.empty(network.dim)
    final_phase_cost = 0.0
    if len(final) > 0:
        with network.coordinator_step():
            final_centers = blackbox.cluster(final, params.k, rng)
            final_phase_cost = cost(final, final_centers)
        c_out = c_out.union(final_centers)

    logger.info('Final phase clustered %d points, %d centers in total.',
                len(final), len(c_out))

    reduced = reduce_to_k(network, c_out, params.k, blackbox, rng)

    return SoccerResult(
        c_out=c_out,
        reduced_centers=reduced,
        final_cost=0.0,
        loop_rounds=len(records),
        round_records=records,
        constants=constants,
        final_centers=final_centers,
        final_input_size=len(final),
        final_phase_cost=final_phase_cost,
        ledger=network.ledger,
        timer=network.timer,
    )


def run_soccer(data: Dataset,
               params: SoccerParams,
               m: int,
               blackbox: Optional[BlackBox] = None,
               seed: int = 0,
               strategy: Union[PartitionStrategy, str] = PartitionStrategy.UNIFORM_RANDOM,
               gamma: float = 1.0,
               workers: int = 1,
               timing: Union[TimingMode, str] = TimingMode.WALL) -> SoccerResult:
    """Partitions `data` among `m` machines and runs the algorithm on it.

    The seed fixes the partition, every machine's generator and the
    coordinator's generator, so a run is reproducible whatever the number
    of workers.

    Args:
        data: The dataset.
        params: The run parameters.
        m: The number of machines.
        blackbox: The centralized clustering algorithm. Defaults to a
            `KMeansBlackBox` with default settings.
        seed: The master seed of the run.
        strategy: How points are split among machines.
        gamma: The skew of `PartitionStrategy.SKEWED`.
        workers: The number of threads executing machine steps.
        timing: How machine time is measured.

    Returns:
        The result, with `final_cost` the cost of `data` with the reduced
        centers.
    """

    if blackbox is None:
        blackbox = KMeansBlackBox(BlackBoxConfig(target_k=params.k))

    partition_seed, coordinator_seed = SeedSequence(seed).spawn(2)
    network = Network.from_dataset(data, m, strategy, partition_seed, gamma,
                                   workers, timing)

    rng = np.random.default_rng(coordinator_seed)
    result = run_soccer_on_network(network, params, blackbox, rng,
                                   n=len(data))
    result.final_cost = cost(data, result.reduced_centers)

    logger.info('Finished after %d loop rounds with %d centers, cost %.6g.',
                result.loop_rounds, len(result.c_out), result.final_cost)
    return result
