import numpy as np

from distkm.geometry import CenterSet, sq_dists_to_set
from distkm.blackbox.config import WeightedDataset
from distkm.blackbox.errors import EmptyDatasetError


def draw_index(weights: np.ndarray, rng: np.random.Generator) -> int:
    """Draws an index with probability proportional to `weights`.

    Entries with zero weight are never drawn as long as some weight is
    positive.
    """

    cumulative = np.cumsum(weights)
    target = rng.random() * cumulative[-1]
    index = int(np.searchsorted(cumulative, target, side='right'))

    return min(index, len(weights) - 1)


def kmeanspp_seed(data: WeightedDataset,
                  k: int,
                  rng: np.random.Generator) -> CenterSet:
    """Chooses initial centers by weighted D^2 sampling.

    The first center is drawn with probability proportional to the weight of
    a point, every next one with probability proportional to the weight
    times the squared distance to the centers chosen so far. Sampling stops
    early once every point coincides with a chosen center, so at most
    `min(k, number of distinct points)` centers are returned.

    Args:
        data: Weighted points to choose from.
        k: The maximal number of centers.
        rng: A random stream; the same stream state gives the same centers.

    Returns:
        The chosen centers, in the order they were drawn.

    Raises:
        EmptyDatasetError: Raised when `data` has no points.
        ValueError: Raised when `k` is not positive.
    """

    if len(data) == 0:
        raise EmptyDatasetError('Cannot seed centers on an empty dataset.')
    if k < 1:
        raise ValueError(f'The number of centers must be positive, got {k}.')

    points = data.points
    weights = data.weights

    chosen = [draw_index(weights, rng)]
    closest = sq_dists_to_set(points, points[chosen[-1]])

    while len(chosen) < k:
        potential = weights * closest
        if not np.any(potential > 0):
            break

        chosen.append(draw_index(potential, rng))
        closest = np.minimum(closest,
                             sq_dists_to_set(points, points[chosen[-1]]))

    return CenterSet(points[chosen], dim=data.dim)
