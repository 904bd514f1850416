from itertools import combinations
from typing import Iterable, Tuple

import numpy as np
from scipy.spatial.distance import cdist

from distkm.geometry import Dataset, CenterSet, cost
from distkm.blackbox.cluster import BlackBox
from distkm.blackbox.errors import EmptyDatasetError, InstanceTooLargeError


MAX_BRUTE_FORCE_POINTS = 20


def brute_force_optimal(data: Dataset, k: int) -> Tuple[CenterSet, float]:
    """Finds an optimal k-clustering whose centers are points of `data`.

    Every subset of `min(k, len(data))` points is tried; adding a center
    never increases the cost, so smaller subsets need not be. Among equally
    cheap subsets the first in lexicographic order of positions wins.

    Args:
        data: At most `MAX_BRUTE_FORCE_POINTS` points.
        k: The maximal number of centers.

    Returns:
        The optimal centers and their cost.

    Raises:
        InstanceTooLargeError: Raised when `data` has too many points.
        EmptyDatasetError: Raised when `data` has no points.

    Examples:
        >>> centers, value = brute_force_optimal(Dataset([[0], [1], [10]]), 2)
        >>> value
        1.0
    """

    if len(data) == 0:
        raise EmptyDatasetError('Cannot search clusterings of no points.')
    if len(data) > MAX_BRUTE_FORCE_POINTS:
        raise InstanceTooLargeError(f'Exhaustive search is limited to '
                                    f'{MAX_BRUTE_FORCE_POINTS} points, '
                                    f'got {len(data)}.')
    if k < 1:
        raise ValueError(f'The number of centers must be positive, got {k}.')

    table = cdist(data.points, data.points, 'sqeuclidean')

    best, best_cost = None, np.inf
    for subset in combinations(range(len(data)), min(k, len(data))):
        value = float(np.sum(np.min(table[:, list(subset)], axis=1)))
        if value < best_cost:
            best, best_cost = subset, value

    return CenterSet(data.points[list(best)], dim=data.dim), best_cost


def empirical_beta(blackbox: BlackBox,
                   instances: Iterable[Tuple[Dataset, int]],
                   rng: np.random.Generator) -> float:
    """Returns the largest observed ratio of black-box cost to optimal cost.

    This is a surrogate for the approximation factor of the black box on
    the given instances, not a bound. An instance whose optimal cost is zero
    counts as ratio one when the black box also reaches zero and as infinity
    otherwise.
    """

    worst = 1.0
    for data, k in instances:
        _, optimal = brute_force_optimal(data, k)
        found = cost(data, blackbox.cluster(data, k, rng))

        if optimal > 0:
            worst = max(worst, found / optimal)
        elif found > 0:
            return float('inf')

    return worst
