import logging
from dataclasses import dataclass

import numpy as np

from distkm.geometry import Dataset, CenterSet, cost
from distkm.datagen.errors import DatasetError


logger = logging.getLogger(__name__)


@dataclass
class GeneratedDataset:
    """A synthetic dataset together with the centers it was built around.

    Attributes:
        dataset: The points.
        centers: The generating centers.
        cost: The cost of the points with the generating centers, a stand-in
            for the optimal cost.
        labels: The generating center of every point.
    """

    dataset: Dataset
    centers: CenterSet
    cost: float
    labels: np.ndarray


def zipf_weights(k: int, gamma: float) -> np.ndarray:
    """Returns the normalized weights `i ** -gamma` for `i = 1, ..., k`.

    Examples:
        >>> zipf_weights(2, 1.0).tolist()
        [0.6666666666666666, 0.3333333333333333]
    """

    weights = np.arange(1, k + 1, dtype=np.float64) ** -float(gamma)
    return weights / weights.sum()


@dataclass(frozen=True)
class GaussianMixtureSpec:
    """A mixture of spherical Gaussians with Zipf-distributed sizes.

    The means are drawn uniformly from the cube `[0, cube_side] ** dim`, and
    component `i` is picked with probability proportional to `i ** -gamma`.

    Attributes:
        k: The number of components.
        dim: The dimension.
        sigma: The standard deviation of every coordinate.
        zipf_gamma: The Zipf exponent of the component sizes.
        n: The number of points.
        seed: The seed of the means, the components and the noise.
        cube_side: The side of the cube holding the means.
    """

    k: int = 25
    dim: int = 15
    sigma: float = 0.001
    zipf_gamma: float = 1.5
    n: int = 200_000
    seed: int = 0
    cube_side: float = 1.0

    def __post_init__(self):
        if self.k < 1:
            raise DatasetError(f'A mixture needs at least one component, '
                               f'got {self.k}.')
        if self.dim < 1:
            raise DatasetError(f'The dimension must be positive, '
                               f'got {self.dim}.')
        if not self.sigma > 0:
            raise DatasetError(f'sigma must be positive, got {self.sigma}.')
        if self.zipf_gamma < 0:
            raise DatasetError(f'The Zipf exponent must be nonnegative, '
                               f'got {self.zipf_gamma}.')
        if self.n < 1:
            raise DatasetError(f'The number of points must be positive, '
                               f'got {self.n}.')
        if not self.cube_side > 0:
            raise DatasetError(f'The cube side must be positive, '
                               f'got {self.cube_side}.')

    @property
    def weights(self) -> np.ndarray:
        return zipf_weights(self.k, self.zipf_gamma)


def gen_gaussian_mixture(spec: GaussianMixtureSpec) -> GeneratedDataset:
    """Draws a dataset from a Gaussian mixture.

    The cost with the generating means is about `n * dim * sigma ** 2`.

    Examples:
        >>> spec = GaussianMixtureSpec(k=3, dim=2, n=100)
        >>> generated = gen_gaussian_mixture(spec)
        >>> len(generated.dataset), len(generated.centers)
        (100, 3)
    """

    rng = np.random.default_rng(spec.seed)

    means = rng.uniform(0.0, spec.cube_side, size=(spec.k, spec.dim))
    labels = rng.choice(spec.k, size=spec.n, p=spec.weights)
    noise = rng.normal(scale=spec.sigma, size=(spec.n, spec.dim))

    dataset = Dataset(means[labels] + noise)
    centers = CenterSet(means)
    planted = cost(dataset, centers)

    logger.debug('Generated %d points from %d components, planted cost %g.',
                 spec.n, spec.k, planted)
    return GeneratedDataset(dataset, centers, planted, labels)
