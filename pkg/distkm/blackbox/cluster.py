import logging
from abc import ABCMeta, abstractmethod
from typing import Optional, Union

import numpy as np

from distkm.geometry import Dataset, CenterSet
from distkm.blackbox.config import BlackBoxConfig, WeightedDataset, centers_of
from distkm.blackbox.errors import EmptyDatasetError
from distkm.blackbox.lloyd import lloyd_trace
from distkm.blackbox.seeding import kmeanspp_seed


logger = logging.getLogger(__name__)


def cluster(data: Union[WeightedDataset, Dataset],
            k: int,
            config: BlackBoxConfig,
            rng: np.random.Generator) -> CenterSet:
    """Computes a weighted k-clustering of `data`.

    Duplicate points are merged first. If there are at most `k` distinct
    points they are returned as they are, giving a cost of zero. Otherwise
    `config.n_init` restarts of k-means++ seeding followed by Lloyd
    iterations are run and the cheapest result is returned.

    Args:
        data: Points to cluster. A plain `Dataset` is taken with unit weights.
        k: The maximal number of centers.
        config: Black-box settings.
        rng: A random stream; the same stream state gives bitwise-identical
            centers.

    Returns:
        At most `k` centers.

    Raises:
        EmptyDatasetError: Raised when `data` has no points.
        ValueError: Raised when `k` is not positive.
    """

    if isinstance(data, Dataset):
        data = WeightedDataset.unit(data)
    if len(data) == 0:
        raise EmptyDatasetError('Cannot cluster an empty dataset.')
    if k < 1:
        raise ValueError(f'The number of centers must be positive, got {k}.')

    distinct = data.distinct()
    if len(distinct) <= k:
        return centers_of(distinct)

    best = None
    for restart in range(config.n_init):
        seeds = kmeanspp_seed(distinct, k, rng)
        trace = lloyd_trace(distinct, seeds, config)

        logger.debug('Restart %d of %d: cost %.6g.',
                     restart + 1, config.n_init, trace.cost)

        if best is None or trace.cost < best.cost:
            best = trace

    return best.centers


class BlackBox(metaclass=ABCMeta):
    """A centralized k-means algorithm.

    The coordinator hands the black box a weighted set of points and a
    number of centers and gets back at most that many centers.
    """

    @abstractmethod
    def cluster(self,
                data: Union[WeightedDataset, Dataset],
                k: int,
                rng: np.random.Generator) -> CenterSet:
        """Returns at most `k` centers for `data`."""


class KMeansBlackBox(BlackBox):
    """The k-means++ and Lloyd black box.

    Examples:
        >>> box = KMeansBlackBox(BlackBoxConfig(n_init=5))
        >>> rng = np.random.default_rng(0)
        >>> len(box.cluster(Dataset([[0], [1], [10]]), 2, rng))
        2
    """

    def __init__(self, config: Optional[BlackBoxConfig] = None):
        self.config = config or BlackBoxConfig()

    def __repr__(self):
        return f'KMeansBlackBox(config={repr(self.config)})'

    def cluster(self,
                data: Union[WeightedDataset, Dataset],
                k: Optional[int] = None,
                rng: Optional[np.random.Generator] = None) -> CenterSet:
        if k is None:
            k = self.config.target_k
        if rng is None:
            rng = np.random.default_rng()

        return cluster(data, k, self.config, rng)
