from dataclasses import dataclass, fields
from enum import Enum
from pathlib import Path
from typing import Optional, Tuple, Union

from distkm.geometry import Dataset
from distkm.blackbox import BlackBoxConfig, ClusterMode
from distkm.simnet import PartitionStrategy, TimingMode
from distkm.soccer import SoccerParams, ConstantsMode, SamplingMode, \
    SoccerError
from distkm.kmeans_parallel import KmppParams
from distkm.datagen import GaussianMixtureSpec, HardInstanceSpec, \
    DatasetError, gen_gaussian_mixture, gen_hard_instance, load_csv
from distkm.harness.errors import ConfigError


class Algorithm(Enum):
    SOCCER = 'soccer'
    KMEANS_PARALLEL = 'kmeans_parallel'


class OutputFormat(Enum):
    CSV = 'csv'
    MARKDOWN = 'markdown'


GAUSSIAN = 'gaussian'
HARD = 'hard'


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything needed to repeat an experiment.

    The dataset is `'gaussian'`, `'hard'` or the path of a CSV file. Synthetic
    datasets are generated once from the master seed; repetitions differ
    only in the seed of the run.

    Attributes:
        dataset: The dataset source.
        algo: The algorithm.
        k: The number of clusters.
        epsilon: The capacity exponent of the round-reduction loop.
        delta: Its failure probability.
        rounds: The number of rounds of the seeding baseline.
        oversampling: The points selected per round by the seeding
            baseline. Defaults to `2 * k`.
        machines: The number of machines.
        reps: The number of repetitions.
        seed: The master seed.
        constants_mode: The logarithm argument of the derived constants.
        sampling_mode: How machines sample.
        capacity_constant: The leading constant of the coordinator capacity.
        partition: How points are split among machines.
        skew: The exponent of the skewed partition.
        workers: The threads executing machine steps.
        rep_workers: The threads executing repetitions.
        timing: How machine time is measured.
        blackbox_mode: How the black box places centers.
        n, dim, sigma, zipf_gamma, cube_side: The Gaussian mixture.
        z, separation, growth: The hard instance.
        delimiter, header, columns: The CSV layout.
    """

    k: int
    dataset: str = GAUSSIAN
    algo: Algorithm = Algorithm.SOCCER
    epsilon: float = 0.05
    delta: float = 0.1
    rounds: int = 5
    oversampling: Optional[int] = None
    machines: int = 50
    reps: int = 10
    seed: int = 0
    constants_mode: ConstantsMode = ConstantsMode.EXPERIMENT
    sampling_mode: SamplingMode = SamplingMode.EXACT_FRACTION
    capacity_constant: float = 36.0
    partition: PartitionStrategy = PartitionStrategy.UNIFORM_RANDOM
    skew: float = 1.0
    workers: int = 1
    rep_workers: int = 1
    timing: TimingMode = TimingMode.WALL
    blackbox_mode: ClusterMode = ClusterMode.CENTROID
    n: int = 200_000
    dim: int = 15
    sigma: float = 0.001
    zipf_gamma: float = 1.5
    cube_side: float = 1.0
    z: int = 100
    separation: float = 1e3
    growth: float = 1.0
    delimiter: str = ','
    header: bool = False
    columns: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        enums = {
            'algo': Algorithm,
            'constants_mode': ConstantsMode,
            'sampling_mode': SamplingMode,
            'partition': PartitionStrategy,
            'timing': TimingMode,
            'blackbox_mode': ClusterMode,
        }
        for name, kind in enums.items():
            try:
                object.__setattr__(self, name, kind(getattr(self, name)))
            except ValueError as exc:
                raise ConfigError(f'Invalid {name}: {exc}') from None

        for name in ('reps', 'machines', 'workers', 'rep_workers'):
            if getattr(self, name) < 1:
                raise ConfigError(f'{name} must be positive, '
                                  f'got {getattr(self, name)}.')
        if self.seed < 0:
            raise ConfigError(f'The seed must be nonnegative, got {self.seed}.')
        if self.columns is not None:
            object.__setattr__(self, 'columns', tuple(self.columns))

        # Fails early on parameters that are invalid for the algorithm.
        if self.algo is Algorithm.SOCCER:
            self.soccer_params()
        else:
            self.kmpp_params()
        if self.dataset == GAUSSIAN:
            self.gaussian_spec()
        elif self.dataset == HARD:
            self.hard_spec()

    @classmethod
    def field_names(cls) -> Tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    def soccer_params(self) -> SoccerParams:
        try:
            return SoccerParams(k=self.k,
                                delta=self.delta,
                                epsilon=self.epsilon,
                                constants_mode=self.constants_mode,
                                sampling_mode=self.sampling_mode,
                                capacity_constant=self.capacity_constant)
        except SoccerError as exc:
            raise ConfigError(str(exc)) from exc

    def kmpp_params(self) -> KmppParams:
        try:
            return KmppParams(k=self.k,
                              rounds=self.rounds,
                              oversampling=self.oversampling)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def blackbox_config(self) -> BlackBoxConfig:
        return BlackBoxConfig(target_k=self.k, mode=self.blackbox_mode)

    def gaussian_spec(self) -> GaussianMixtureSpec:
        try:
            return GaussianMixtureSpec(k=self.k, dim=self.dim,
                                       sigma=self.sigma,
                                       zipf_gamma=self.zipf_gamma,
                                       n=self.n, seed=self.seed,
                                       cube_side=self.cube_side)
        except DatasetError as exc:
            raise ConfigError(str(exc)) from exc

    def hard_spec(self) -> HardInstanceSpec:
        try:
            return HardInstanceSpec(k=self.k, z=self.z,
                                    separation=self.separation,
                                    growth=self.growth)
        except DatasetError as exc:
            raise ConfigError(str(exc)) from exc

    @property
    def dataset_name(self) -> str:
        if self.dataset in (GAUSSIAN, HARD):
            return self.dataset
        return Path(self.dataset).stem

    def load_dataset(self) -> Dataset:
        """Generates or reads the dataset.

        Raises:
            DatasetError: Raised when a CSV file cannot be read.
        """

        if self.dataset == GAUSSIAN:
            return gen_gaussian_mixture(self.gaussian_spec()).dataset
        if self.dataset == HARD:
            return gen_hard_instance(self.hard_spec()).dataset
        return load_csv(self.dataset, self.delimiter, self.header,
                        self.columns)
