import math
from dataclasses import dataclass

import numpy as np

from distkm.geometry import Dataset, CenterSet
from distkm.datagen.errors import DatasetError
from distkm.datagen.gaussian import GeneratedDataset


@dataclass(frozen=True)
class HardInstanceSpec:
    """A multiset of `k` locations on which few seeding rounds fail.

    One block holds the first location `k - 1` times and every other
    location once. The dataset is `z` copies of the block, so it has
    `z * (2k - 2)` points and exactly `k` distinct ones.

    The first location is the origin and location `i >= 2` lies on its own
    axis at distance `separation * growth ** (i - 2)`. The default growth of
    1 places the locations at scaled basis points. With a large growth such
    as 1e3 the farthest uncovered location dominates every squared-distance
    sampling step, so a seeding round covers about one new location.

    Attributes:
        k: The number of locations, at least 2.
        z: The number of copies of the block.
        separation: The smallest distance between two locations.
        growth: The ratio of consecutive distances from the origin, at
            least 1.
    """

    k: int = 10
    z: int = 100
    separation: float = 1e3
    growth: float = 1.0

    def __post_init__(self):
        if self.k < 2:
            raise DatasetError(f'The hard instance needs at least two '
                               f'locations, got {self.k}.')
        if self.z < 1:
            raise DatasetError(f'The number of copies must be positive, '
                               f'got {self.z}.')
        if not self.separation > 0:
            raise DatasetError(f'The separation must be positive, '
                               f'got {self.separation}.')
        if self.growth < 1:
            raise DatasetError(f'The growth must be at least 1, '
                               f'got {self.growth}.')

        extent = math.log10(self.separation) \
            + (self.k - 2) * math.log10(self.growth)
        if 2 * extent > 300:
            raise DatasetError(f'Squared distances up to 1e{2 * extent:.0f} '
                               f'do not fit in a float.')

    @property
    def n(self) -> int:
        return self.z * (2 * self.k - 2)


def hard_locations(spec: HardInstanceSpec) -> np.ndarray:
    """Returns the `k` distinct locations, one per row, in dimension
    `k - 1`."""

    locations = np.zeros((spec.k, spec.k - 1))
    for i in range(1, spec.k):
        locations[i, i - 1] = spec.separation * spec.growth ** (i - 1)
    return locations


def gen_hard_instance(spec: HardInstanceSpec) -> GeneratedDataset:
    """Builds the hard instance.

    Returns:
        The dataset with the locations as centers and an optimal cost of 0.

    Examples:
        >>> generated = gen_hard_instance(HardInstanceSpec(k=3, z=1))
        >>> generated.dataset.points[:, 0].tolist()
        [0.0, 0.0, 1000.0, 0.0]
    """

    locations = hard_locations(spec)

    block = np.concatenate([np.zeros(spec.k - 1, dtype=np.int64),
                            np.arange(1, spec.k)])
    labels = np.tile(block, spec.z)

    return GeneratedDataset(Dataset(locations[labels]),
                            CenterSet(locations),
                            0.0,
                            labels)
