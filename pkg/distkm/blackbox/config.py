from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

import numpy as np

from distkm.geometry import Dataset, CenterSet


class ClusterMode(Enum):
    """How the black box places centers."""

    CENTROID = 'centroid'
    MEDOID = 'medoid'


@dataclass(frozen=True)
class BlackBoxConfig:
    """Settings of the centralized k-means black box.

    Attributes:
        target_k: The default number of centers.
        max_lloyd_iters: The maximal number of Lloyd iterations per restart.
        n_init: The number of seeded restarts; the cheapest one wins.
        convergence_tol: Lloyd stops when the cost improves by less than this
            fraction of the previous cost.
        mode: `CENTROID` places centers at weighted means, `MEDOID` keeps
            them on input points.
    """

    target_k: int = 2
    max_lloyd_iters: int = 100
    n_init: int = 3
    convergence_tol: float = 1e-6
    mode: ClusterMode = ClusterMode.CENTROID

    def __post_init__(self):
        if self.target_k < 1:
            raise ValueError(f'`target_k` must be positive, '
                             f'got {self.target_k}.')
        if self.max_lloyd_iters < 1:
            raise ValueError(f'`max_lloyd_iters` must be positive, '
                             f'got {self.max_lloyd_iters}.')
        if self.n_init < 1:
            raise ValueError(f'`n_init` must be positive, got {self.n_init}.')
        if self.convergence_tol < 0:
            raise ValueError(f'`convergence_tol` must be nonnegative, '
                             f'got {self.convergence_tol}.')
        if not isinstance(self.mode, ClusterMode):
            object.__setattr__(self, 'mode', ClusterMode(self.mode))


class WeightedDataset:
    """A dataset whose points carry positive multiplicities.

    Attributes:
        base: The underlying dataset.
        weights: A read-only vector of positive weights, one per point.
    """

    def __init__(self,
                 base: Dataset,
                 weights: Optional[Union[np.ndarray, Sequence[float]]] = None):
        if weights is None:
            weights = np.ones(len(base))
        weights = np.array(weights, dtype=np.float64, copy=True).reshape(-1)

        if len(weights) != len(base):
            raise ValueError(f'Got {len(weights)} weights '
                             f'for {len(base)} points.')
        if not np.all(np.isfinite(weights)) or np.any(weights <= 0):
            raise ValueError('Weights must be positive and finite.')

        weights.flags.writeable = False
        self.base = base
        self.weights = weights

    @classmethod
    def unit(cls, base: Dataset) -> 'WeightedDataset':
        """Wraps a dataset with all weights equal to one."""
        return cls(base, np.ones(len(base)))

    @property
    def points(self) -> np.ndarray:
        return self.base.points

    @property
    def dim(self) -> int:
        return self.base.dim

    def distinct(self) -> 'WeightedDataset':
        """Merges duplicate points, summing their weights.

        The result lists distinct points in the order of their first
        occurrence and keeps the index of that occurrence.
        """

        _, first, inverse = np.unique(self.points, axis=0,
                                      return_index=True, return_inverse=True)
        inverse = inverse.reshape(-1)
        order = np.argsort(first, kind='stable')
        rank = np.empty_like(order)
        rank[order] = np.arange(len(order))

        weights = np.bincount(rank[inverse], weights=self.weights,
                              minlength=len(order))
        return WeightedDataset(self.base.take(first[order]), weights)

    def __len__(self):
        return len(self.base)

    def __repr__(self):
        return f'WeightedDataset(n={len(self)}, dim={self.dim}, ' \
               f'total_weight={float(np.sum(self.weights))})'


def centers_of(data: WeightedDataset) -> CenterSet:
    """Returns the points of `data` as a center set."""
    return CenterSet(data.points, dim=data.dim)
