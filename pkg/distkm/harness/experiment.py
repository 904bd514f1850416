import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List

from distkm.geometry import Dataset
from distkm.blackbox import KMeansBlackBox
from distkm.simnet import mix_seed
from distkm.soccer import run_soccer
from distkm.kmeans_parallel import run_kmeans_parallel
from distkm.harness.config import Algorithm, ExperimentConfig
from distkm.harness.errors import ExperimentError
from distkm.harness.outcome import Success, safe
from distkm.harness.rows import ResultRow, aggregate


logger = logging.getLogger(__name__)


def rep_seed(master: int, rep: int) -> int:
    """Returns the seed of repetition `rep`.

    The seed is the first word of `SeedSequence([master, rep])`, cleared to
    63 bits, so repetitions are reproducible and independent.
    """
    return mix_seed(master, rep)


def run_rep(config: ExperimentConfig, data: Dataset, rep: int) -> ResultRow:
    """Runs one repetition and describes it as a row."""

    seed = rep_seed(config.seed, rep)
    blackbox = KMeansBlackBox(config.blackbox_config())
    start = time.perf_counter()

    if config.algo is Algorithm.SOCCER:
        result = run_soccer(data, config.soccer_params(), config.machines,
                            blackbox, seed, config.partition, config.skew,
                            config.workers, config.timing)
        rounds, output_size = result.loop_rounds, result.output_size
        final_cost, ledger, timer = result.final_cost, result.ledger, \
            result.timer
        epsilon = config.epsilon
    else:
        _, metrics = run_kmeans_parallel(data, config.kmpp_params(),
                                         config.machines, blackbox, seed,
                                         config.partition, config.skew,
                                         config.workers, config.timing)
        rounds, output_size = metrics.rounds, metrics.output_size
        final_cost, ledger, timer = metrics.final_cost, metrics.ledger, \
            metrics.timer
        epsilon = None

    elapsed = time.perf_counter() - start
    logger.info('Repetition %d (seed %d): %d rounds, %d centers, cost %.6g.',
                rep, seed, rounds, output_size, final_cost)

    return ResultRow(
        dataset=config.dataset_name,
        algo=config.algo.value,
        k=config.k,
        epsilon=epsilon,
        rounds=rounds,
        rounds_std=0.0,
        output_size=output_size,
        output_size_std=0.0,
        cost=float(final_cost),
        cost_std=0.0,
        machine_time_s=timer.machine_time,
        total_time_s=elapsed,
        coord_points_received=ledger.points_to_coordinator,
        coord_points_broadcast=ledger.points_broadcast,
        rep_count=1,
        seed=seed,
    )


def run_experiment(config: ExperimentConfig) -> List[ResultRow]:
    """Runs every repetition of an experiment.

    Repetitions may run on `config.rep_workers` threads; rows always come
    in repetition order.

    Returns:
        One row per repetition followed by their aggregate.

    Raises:
        DatasetError: Raised when the dataset cannot be loaded.
        ExperimentError: Raised for the first failed repetition, chained to
            the error it raised.
    """

    data = config.load_dataset()
    logger.info('Running %s on %s (%d points) for %d repetitions.',
                config.algo.value, config.dataset_name, len(data),
                config.reps)

    run = safe(run_rep)
    reps = range(config.reps)
    if config.rep_workers == 1:
        outcomes = [run(config, data, rep) for rep in reps]
    else:
        with ThreadPoolExecutor(max_workers=config.rep_workers) as pool:
            outcomes = list(pool.map(lambda rep: run(config, data, rep), reps))

    rows = []
    for rep, outcome in zip(reps, outcomes):
        if not isinstance(outcome, Success):
            raise ExperimentError(rep, outcome.error) from outcome.error
        rows.append(outcome.unwrap())

    return rows + [aggregate(rows, config.seed)]
