import pytest
from pytest import mark

from distkm.blackbox import ClusterMode
from distkm.simnet import PartitionStrategy
from distkm.soccer import SamplingMode
from distkm.harness import Algorithm, ExperimentConfig, ConfigError


def test_experiment_config_coerces_enums():
    """Test that enum fields accept their string values."""

    config = ExperimentConfig(k=5, algo='kmeans_parallel',
                              sampling_mode='bernoulli',
                              partition='skewed', blackbox_mode='medoid')

    assert config.algo is Algorithm.KMEANS_PARALLEL
    assert config.sampling_mode is SamplingMode.BERNOULLI
    assert config.partition is PartitionStrategy.SKEWED
    assert config.blackbox_mode is ClusterMode.MEDOID


def test_experiment_config_builds_parameters():
    """Test that the algorithm parameters follow the configuration."""

    config = ExperimentConfig(k=4, epsilon=0.2, delta=0.3, rounds=2,
                              capacity_constant=2.0)

    params = config.soccer_params()
    assert (params.k, params.epsilon, params.delta) == (4, 0.2, 0.3)
    assert params.capacity_constant == 2.0
    assert config.kmpp_params().l == 8
    assert config.blackbox_config().target_k == 4


@mark.parametrize("kwargs, match", [
    ({'algo': 'lloyd'}, 'algo'),
    ({'reps': 0}, 'reps'),
    ({'machines': 0}, 'machines'),
    ({'rep_workers': 0}, 'rep_workers'),
    ({'seed': -1}, 'seed'),
    ({'partition': 'round_robin'}, 'partition'),
])
def test_experiment_config_raising_error(kwargs, match):
    """Test that invalid fields raise `ConfigError`."""

    with pytest.raises(ConfigError, match=match):
        ExperimentConfig(k=3, **kwargs)


@mark.parametrize("kwargs", [
    {'epsilon': 0.0},
    {'epsilon': 1.5},
    {'k': 0},
    {'algo': 'kmeans_parallel', 'rounds': -1},
    {'dataset': 'hard', 'k': 1},
    {'sigma': -1.0},
])
def test_experiment_config_rejects_invalid_parameters_early(kwargs):
    """Test that parameters invalid for the algorithm or the dataset fail
    when the configuration is created."""

    kwargs = {'k': 3, **kwargs}
    with pytest.raises(ConfigError):
        ExperimentConfig(**kwargs)


def test_experiment_config_dataset_name():
    """Test that a CSV dataset is named after its file."""

    assert ExperimentConfig(k=3).dataset_name == 'gaussian'
    assert ExperimentConfig(k=3, dataset='hard').dataset_name == 'hard'
    assert ExperimentConfig(k=3, dataset='data/iris.csv').dataset_name == \
        'iris'


def test_experiment_config_loads_datasets(tmp_path):
    """Test that synthetic datasets are generated and CSV files read."""

    hard = ExperimentConfig(k=10, dataset='hard').load_dataset()
    assert len(hard) == 1800
    assert hard.dim == 9

    gaussian = ExperimentConfig(k=3, n=400, dim=4).load_dataset()
    assert (len(gaussian), gaussian.dim) == (400, 4)

    path = tmp_path / 'points.csv'
    path.write_text('a;b;c\n1;2;3\n4;5;6\n', encoding='utf-8')
    config = ExperimentConfig(k=2, dataset=str(path), delimiter=';',
                              header=True, columns=[0, 2])
    assert config.columns == (0, 2)
    assert config.load_dataset().points.tolist() == [[1.0, 3.0], [4.0, 6.0]]
