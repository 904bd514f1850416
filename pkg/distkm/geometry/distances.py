from typing import Tuple, Union

import numpy as np
from scipy.spatial.distance import cdist

from distkm.geometry.errors import DimensionMismatchError, EmptyCenterSetError
from distkm.geometry.points import Point, Dataset, CenterSet


# Rows of a dataset handled per call to `cdist`.
BLOCK_SIZE = 8192


def _points(data: Union[Dataset, np.ndarray]) -> np.ndarray:
    if isinstance(data, Dataset):
        return data.points
    return np.atleast_2d(np.asarray(data, dtype=np.float64))


def _centers(centers: Union[CenterSet, np.ndarray]) -> np.ndarray:
    if isinstance(centers, CenterSet):
        matrix = centers.centers
    else:
        matrix = np.atleast_2d(np.asarray(centers, dtype=np.float64))
    if matrix.size == 0:
        raise EmptyCenterSetError('Cannot evaluate a cost against '
                                  'an empty set of centers.')
    return matrix


def _check_dims(points: np.ndarray, centers: np.ndarray):
    if points.shape[1] != centers.shape[1]:
        raise DimensionMismatchError(f'Points of dimension {points.shape[1]} '
                                     f'cannot be compared with centers of '
                                     f'dimension {centers.shape[1]}.')


def sq_dist(a: Point, b: Point) -> float:
    """Returns the squared Euclidean distance between two points.

    Examples:
        >>> sq_dist([0, 0], [3, 4])
        25.0
        >>> sq_dist([1, 2], [4, 6])
        25.0

    Raises:
        DimensionMismatchError: Raised when the points have different
            dimensions.
    """

    a = np.asarray(a, dtype=np.float64).reshape(-1)
    b = np.asarray(b, dtype=np.float64).reshape(-1)
    if a.shape != b.shape:
        raise DimensionMismatchError(f'Cannot compare points of dimension '
                                     f'{a.size} and {b.size}.')

    diff = a - b
    return float(np.dot(diff, diff))


def sq_dists_to_set(data: Union[Dataset, np.ndarray],
                    centers: Union[CenterSet, np.ndarray]) -> np.ndarray:
    """Returns the squared distance of every point to its nearest center."""
    return assign_with_distances(data, centers)[1]


def assign_with_distances(data: Union[Dataset, np.ndarray],
                          centers: Union[CenterSet, np.ndarray]
                          ) -> Tuple[np.ndarray, np.ndarray]:
    """Assigns each point to a nearest center.

    Distances are computed block by block from coordinate differences, so
    points that coincide with a center get an exact zero.

    Args:
        data: Points to assign.
        centers: A non-empty set of centers.

    Returns:
        A pair of vectors: the index of a nearest center for every point
        (the lowest index among equally near centers) and the squared
        distance to it.

    Raises:
        EmptyCenterSetError: Raised when `centers` is empty.
        DimensionMismatchError: Raised when the dimensions differ.
    """

    points = _points(data)
    matrix = _centers(centers)

    labels = np.empty(len(points), dtype=np.int64)
    dists = np.empty(len(points), dtype=np.float64)
    if len(points) == 0:
        return labels, dists

    _check_dims(points, matrix)

    for start in range(0, len(points), BLOCK_SIZE):
        block = cdist(points[start:start + BLOCK_SIZE], matrix, 'sqeuclidean')
        nearest = np.argmin(block, axis=1)

        labels[start:start + BLOCK_SIZE] = nearest
        dists[start:start + BLOCK_SIZE] = block[np.arange(len(block)), nearest]

    return labels, dists


def dist_sq_to_set(x: Point, centers: Union[CenterSet, np.ndarray]) -> float:
    """Returns the squared distance from `x` to the nearest center.

    Examples:
        >>> dist_sq_to_set([2, 0], CenterSet([[0, 0], [3, 0]]))
        1.0
    """

    x = np.asarray(x, dtype=np.float64).reshape(1, -1)
    return float(sq_dists_to_set(x, centers)[0])


def cost(data: Union[Dataset, np.ndarray],
         centers: Union[CenterSet, np.ndarray]) -> float:
    """Returns the k-means cost of `centers` on `data`.

    Every point is counted with its multiplicity. The sum uses numpy's
    pairwise summation.

    Examples:
        >>> cost(Dataset([[0, 0], [1, 0]]), CenterSet([[0, 0]]))
        1.0
        >>> cost(Dataset([[0, 0], [0, 0]]), CenterSet([[1, 0]]))
        2.0
    """
    return float(np.sum(sq_dists_to_set(data, centers)))


def weighted_cost(data: Union[Dataset, np.ndarray],
                  centers: Union[CenterSet, np.ndarray],
                  weights: np.ndarray) -> float:
    """Returns the sum of `weights[i] * d(x_i, centers)^2`."""

    dists = sq_dists_to_set(data, centers)
    return float(np.sum(np.asarray(weights, dtype=np.float64) * dists))


def truncated_cost(data: Union[Dataset, np.ndarray],
                   centers: Union[CenterSet, np.ndarray],
                   l: int) -> float:
    """Returns the cost after dropping the `l` points that cost the most.

    Args:
        data: Points to evaluate.
        centers: A non-empty set of centers.
        l: The number of most expensive points to drop. Values larger than
            the size of `data` drop everything.

    Returns:
        The sum of the `len(data) - l` smallest squared distances. Which of
        several equally distant points is dropped does not change the value.

    Raises:
        ValueError: Raised when `l` is negative.
        EmptyCenterSetError: Raised when `centers` is empty.

    Examples:
        >>> line = Dataset([[0], [1], [3]])
        >>> truncated_cost(line, CenterSet([[0]]), 1)
        1.0
        >>> truncated_cost(line, CenterSet([[0]]), 3)
        0.0
    """

    if l < 0:
        raise ValueError(f'The truncation count must be nonnegative, got {l}.')

    dists = sq_dists_to_set(data, centers)
    kept = len(dists) - min(int(l), len(dists))
    if kept == 0:
        return 0.0
    if kept == len(dists):
        return float(np.sum(dists))

    return float(np.sum(np.partition(dists, kept - 1)[:kept]))


def assign(data: Union[Dataset, np.ndarray],
           centers: Union[CenterSet, np.ndarray]) -> np.ndarray:
    """Returns the index of a nearest center for every point.

    Ties go to the center with the lowest index.

    Examples:
        >>> assign(Dataset([[1, 0]]), CenterSet([[0, 0], [2, 0]]))
        array([0])
    """
    return assign_with_distances(data, centers)[0]
