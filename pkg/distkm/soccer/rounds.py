import logging
import math
from dataclasses import dataclass
from typing import Mapping, Optional, Tuple, Union

import numpy as np

from distkm.geometry import Dataset, CenterSet, sq_dists_to_set, \
    truncated_cost
from distkm.blackbox import BlackBox
from distkm.simnet import MachineState, machine_step
from distkm.soccer.params import DerivedConstants, SamplingMode


logger = logging.getLogger(__name__)


def sample_size(alpha: float, n: int) -> int:
    """Returns `alpha * n` rounded half up, the size of an exact sample.

    Examples:
        >>> sample_size(0.1, 1000)
        100
        >>> sample_size(0.25, 2)
        1
    """
    return min(n, math.floor(alpha * n + 0.5))


def _subset(machine: MachineState, size: int) -> Dataset:
    positions = machine.rng.choice(len(machine.shard), size=size, replace=False)
    return machine.shard.take(np.sort(positions))


@machine_step
def machine_sample(machine: MachineState,
                   alpha: float,
                   mode: Union[SamplingMode, str] = SamplingMode.EXACT_FRACTION,
                   counts: Optional[Mapping[int, Tuple[int, int]]] = None
                   ) -> Tuple[Dataset, Dataset]:
    """Draws the two independent samples a machine sends in a round.

    The two samples are drawn independently of each other and may overlap.

    Args:
        machine: The sampling machine.
        alpha: The sampling fraction, in `(0, 1]`.
        mode: The sampling mode.
        counts: The sizes of both samples per machine id, as set by the
            coordinator. Required by `SamplingMode.MULTINOMIAL`; with
            `SamplingMode.EXACT_FRACTION` the machine rounds `alpha` times
            its own size when they are absent. Ignored by
            `SamplingMode.BERNOULLI`.

    Returns:
        The samples `P1_j` and `P2_j`.
    """

    mode = SamplingMode(mode)
    if not 0 < alpha <= 1:
        raise ValueError(f'The sampling fraction must lie in (0, 1], '
                         f'got {alpha}.')

    n = len(machine.shard)

    if mode is SamplingMode.BERNOULLI:
        first = machine.rng.random(n) < alpha
        second = machine.rng.random(n) < alpha
        return machine.shard.mask(first), machine.shard.mask(second)

    if mode is SamplingMode.MULTINOMIAL and counts is None:
        raise ValueError('Multinomial sampling needs the per-machine '
                         'sample sizes.')

    if counts is not None:
        first, second = (min(n, int(c)) for c in counts[machine.id])
    else:
        first = second = sample_size(alpha, n)

    return _subset(machine, first), _subset(machine, second)


def _round_total(sizes: np.ndarray, alpha: float) -> int:
    n = int(sizes.sum())
    return min(n, max(1, sample_size(alpha, n)))


def exact_counts(sizes, alpha: float) -> Mapping[int, Tuple[int, int]]:
    """Splits two samples of `alpha * N` points among machines.

    The total is rounded once and divided proportionally to the live machine
    sizes by largest remainder, so the samples together have exactly that
    many points however small the shards are. A round always samples at
    least one point.

    Examples:
        >>> exact_counts([1, 1, 1, 1], 0.3)
        {0: (1, 1), 1: (0, 0), 2: (0, 0), 3: (0, 0)}
    """

    sizes = np.asarray(sizes, dtype=np.int64)
    total = _round_total(sizes, alpha)

    exact = sizes * total / sizes.sum()
    counts = np.floor(exact).astype(np.int64)
    order = np.argsort(-(exact - counts), kind='stable')
    counts[order[:total - int(counts.sum())]] += 1

    return {machine_id: (int(c), int(c)) for machine_id, c in enumerate(counts)}


def multinomial_counts(sizes, alpha: float,
                       rng: np.random.Generator) -> Mapping[int, Tuple[int, int]]:
    """Splits two samples of `alpha * N` points among machines.

    Each sample's total is divided by an independent multinomial draw with
    probabilities proportional to the live machine sizes.
    """

    sizes = np.asarray(sizes, dtype=np.int64)
    total = _round_total(sizes, alpha)
    shares = sizes / sizes.sum()

    first = rng.multinomial(total, shares)
    second = rng.multinomial(total, shares)
    return {machine_id: (int(min(a, size)), int(min(b, size)))
            for machine_id, (a, b, size) in enumerate(zip(first, second, sizes))}


def threshold(p2: Dataset,
              c_iter: CenterSet,
              constants: DerivedConstants) -> float:
    """Computes the removal threshold `v` from the second sample.

    `v = 2 * cost_t(P2, C_iter) / (3 * k * d_k)` where `cost_t` ignores the
    `t = constants.truncation` most expensive points of `P2`.
    """

    if len(p2) == 0:
        return 0.0

    truncated = truncated_cost(p2, c_iter, constants.truncation)
    return 2 * truncated / (3 * constants.k * constants.d_k)


def coordinator_round(p1: Dataset,
                      p2: Dataset,
                      constants: DerivedConstants,
                      blackbox: BlackBox,
                      rng: np.random.Generator,
                      alpha: float) -> Tuple[CenterSet, float, float]:
    """Clusters the first sample and derives the removal threshold.

    Args:
        p1: The union of the first samples, clustered into at most
            `constants.k_plus` centers.
        p2: The union of the second samples, used for the threshold.
        constants: The derived constants.
        blackbox: The centralized clustering algorithm.
        rng: The coordinator's generator.
        alpha: The sampling fraction of the round.

    Returns:
        The round's centers `C_iter`, the threshold `v` and the diagnostic
        `psi = v * k * d_k / alpha`.

    Raises:
        EmptyDatasetError: Raised when the first sample is empty.
    """

    c_iter = blackbox.cluster(p1, min(constants.k_plus, max(len(p1), 1)), rng)
    v = threshold(p2, c_iter, constants)
    psi = v * constants.k * constants.d_k / alpha

    logger.debug('Clustered %d sampled points into %d centers, v=%g.',
                 len(p1), len(c_iter), v)
    return c_iter, v, psi


@dataclass
class Removal:
    """The points a machine removed in one round.

    Attributes:
        count: The number of removed points.
        cost: Their cost with respect to the round's centers.
        indices: Their global indices.
    """

    count: int
    cost: float
    indices: np.ndarray


@machine_step
def machine_remove(machine: MachineState,
                   c_iter: CenterSet,
                   v: float) -> Removal:
    """Removes every point within squared distance `v` of `c_iter`.

    A point is kept exactly when its squared distance to the centers is
    strictly greater than `v`.
    """

    if v < 0:
        raise ValueError(f'The threshold must be nonnegative, got {v}.')

    if len(machine.shard) == 0:
        machine.retain(np.zeros(0, dtype=bool))
        return Removal(0, 0.0, np.empty(0, dtype=np.int64))

    dists = sq_dists_to_set(machine.shard, c_iter)
    machine.charge(len(machine.shard) * len(c_iter))

    keep = dists > v
    removed = machine.retain(keep)
    return Removal(len(removed), float(np.sum(dists[~keep])), removed.indices)


@machine_step
def machine_count(machine: MachineState) -> int:
    """Reports the number of live points."""
    return machine.live_count


@machine_step
def machine_surrender(machine: MachineState) -> Dataset:
    """Hands every live point over for the final phase."""
    return machine.surrender()
