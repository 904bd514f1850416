from typing import Iterable, Optional, Sequence, Union

import numpy as np

from distkm.geometry.errors import DimensionMismatchError, \
    EmptyCenterSetError, NonFiniteCoordinateError


Point = np.ndarray
"""A point is a one-dimensional `float64` array of coordinates."""


def point(coords: Iterable[float]) -> Point:
    """Creates a point from the specified coordinates.

    Examples:
        >>> point([3, 4])
        array([3., 4.])

    Raises:
        NonFiniteCoordinateError: Raised when a coordinate is NaN or infinite.
    """

    value = np.asarray(coords, dtype=np.float64).reshape(-1)
    if not np.all(np.isfinite(value)):
        raise NonFiniteCoordinateError(f'Point {value} has a non-finite '
                                       f'coordinate.')
    return value


def _matrix(values, dim: Optional[int]) -> np.ndarray:
    """Converts `values` into a read-only `(n, dim)` matrix of floats."""

    matrix = np.array(values, dtype=np.float64, copy=True)

    if matrix.size == 0:
        if dim is None:
            if matrix.ndim == 2:
                dim = matrix.shape[1]
            else:
                raise ValueError('The dimension of an empty point set '
                                 'must be specified.')
        matrix = matrix.reshape(0, dim)
    elif matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    elif matrix.ndim != 2:
        raise ValueError(f'Expected a two-dimensional array of points, '
                         f'got an array of shape {matrix.shape}.')

    if dim is not None and matrix.shape[1] != dim:
        raise DimensionMismatchError(f'Expected points of dimension {dim}, '
                                     f'got dimension {matrix.shape[1]}.')
    if matrix.shape[1] < 1:
        raise ValueError('Points must have at least one coordinate.')
    if not np.all(np.isfinite(matrix)):
        rows = np.flatnonzero(~np.all(np.isfinite(matrix), axis=1))
        raise NonFiniteCoordinateError(f'Point {rows[0]} has a non-finite '
                                       f'coordinate.')

    matrix.flags.writeable = False
    return matrix


class Dataset:
    """An indexed multiset of points of a fixed dimension.

    Every point carries a stable global index. Shards, samples and removed
    sets are all datasets whose indices refer back to the universe they were
    taken from, so that the position of a point inside a particular dataset
    may change while its index never does. Duplicates are allowed.

    Attributes:
        points: A read-only `(n, dim)` matrix of coordinates.
        indices: A read-only vector of `n` global indices.

    Examples:
        >>> data = Dataset([[0, 0], [1, 0], [3, 0]])
        >>> len(data), data.dim
        (3, 2)
        >>> data.take([2, 0]).indices
        array([2, 0])
    """

    def __init__(self,
                 points: Union[np.ndarray, Sequence],
                 indices: Optional[Union[np.ndarray, Sequence[int]]] = None,
                 dim: Optional[int] = None):
        self.points = _matrix(points, dim)

        if indices is None:
            indices = np.arange(len(self.points), dtype=np.int64)
        else:
            indices = np.array(indices, dtype=np.int64, copy=True).reshape(-1)
        if len(indices) != len(self.points):
            raise ValueError(f'Got {len(indices)} indices '
                             f'for {len(self.points)} points.')

        indices.flags.writeable = False
        self.indices = indices

    @classmethod
    def empty(cls, dim: int) -> 'Dataset':
        """Creates a dataset of the specified dimension without points."""
        return cls(np.empty((0, dim)), dim=dim)

    @classmethod
    def concat(cls, datasets: Sequence['Dataset'], dim: int) -> 'Dataset':
        """Concatenates datasets in the given order, keeping their indices."""

        if not datasets:
            return cls.empty(dim)

        for data in datasets:
            if data.dim != dim:
                raise DimensionMismatchError(f'Cannot concatenate a dataset '
                                             f'of dimension {data.dim} into '
                                             f'dimension {dim}.')

        return cls(np.concatenate([data.points for data in datasets]),
                   np.concatenate([data.indices for data in datasets]),
                   dim=dim)

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def take(self, positions: Union[np.ndarray, Sequence[int]]) -> 'Dataset':
        """Returns the points at the given local positions.

        Positions are local to this dataset (0 to len - 1); the returned
        dataset keeps the global indices of the selected points.
        """

        positions = np.asarray(positions, dtype=np.int64)
        return Dataset(self.points[positions],
                       self.indices[positions],
                       dim=self.dim)

    def mask(self, keep: np.ndarray) -> 'Dataset':
        """Returns the points where the boolean `keep` vector is true."""
        return Dataset(self.points[keep], self.indices[keep], dim=self.dim)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __repr__(self):
        return f'Dataset(n={len(self)}, dim={self.dim})'


class CenterSet:
    """A set of cluster centers.

    Centers need not be members of any dataset. In medoid mode the black box
    only ever returns points taken from its input, but the set itself does
    not record that.

    Examples:
        >>> centers = CenterSet([[0, 0], [5, 5]])
        >>> len(centers)
        2
        >>> len(centers.union(CenterSet([[1, 1]])))
        3
    """

    def __init__(self,
                 centers: Union[np.ndarray, Sequence],
                 dim: Optional[int] = None):
        self.centers = _matrix(centers, dim)

    @classmethod
    def empty(cls, dim: int) -> 'CenterSet':
        """Creates an empty center set of the specified dimension."""
        return cls(np.empty((0, dim)), dim=dim)

    @property
    def dim(self) -> int:
        return self.centers.shape[1]

    def union(self, other: 'CenterSet') -> 'CenterSet':
        """Returns the centers of `self` followed by the centers of `other`."""

        if other.dim != self.dim:
            raise DimensionMismatchError(f'Cannot join centers of dimension '
                                         f'{self.dim} and {other.dim}.')
        return CenterSet(np.concatenate([self.centers, other.centers]),
                         dim=self.dim)

    def require_non_empty(self) -> 'CenterSet':
        """Returns `self`, or raises `EmptyCenterSetError` if it is empty."""

        if len(self) == 0:
            raise EmptyCenterSetError('The center set is empty.')
        return self

    def __len__(self):
        return len(self.centers)

    def __iter__(self):
        return iter(self.centers)

    def __repr__(self):
        return f'CenterSet(size={len(self)}, dim={self.dim})'
