import argparse
import logging
import sys
from typing import Dict, List, Optional

from distkm.simnet import PartitionStrategy, SimnetError, TimingMode
from distkm.blackbox import ClusterMode
from distkm.soccer import ConstantsMode, SamplingMode, SoccerParams, \
    SoccerError, derive_constants
from distkm.datagen import GaussianMixtureSpec, HardInstanceSpec, \
    DatasetError, gen_gaussian_mixture, gen_hard_instance, save_csv
from distkm.harness.config import Algorithm, ExperimentConfig, OutputFormat
from distkm.harness.emit import emit
from distkm.harness.errors import ConfigError, ExperimentError
from distkm.harness.experiment import run_experiment


logger = logging.getLogger(__name__)

BOOLEAN_KEYS = ('header', 'no_timing')
LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def _values(kind) -> List[str]:
    return [member.value for member in kind]


def _columns(text: str):
    try:
        return tuple(int(c) for c in text.split(',') if c.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f'{text!r} is not a comma-separated '
                                         f'list of column positions.')


def _boolean(key: str, text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ('1', 'true', 'yes', 'on'):
        return True
    if lowered in ('0', 'false', 'no', 'off', ''):
        return False
    raise ConfigError(f'{key} expects a boolean, got {text!r}.')


def read_config_file(path: str) -> Dict[str, str]:
    """Reads `key=value` lines into parser defaults.

    Blank lines and lines starting with `#` are ignored. Keys may use dashes
    or underscores.

    Raises:
        ConfigError: Raised for a line without `=`.
    """

    values = {}
    with open(path, encoding='utf-8') as file:
        for number, line in enumerate(file, start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            if '=' not in line:
                raise ConfigError(f'{path}, line {number}: expected '
                                  f'key=value, got {line!r}.')
            key, value = line.split('=', 1)
            values[key.strip().replace('-', '_')] = value.strip()
    return values


def _add_generator_arguments(parser: argparse.ArgumentParser):
    group = parser.add_argument_group('synthetic datasets')
    group.add_argument('--n', type=int, help='Points of the Gaussian mixture.')
    group.add_argument('--dim', type=int, help='Dimension of the mixture.')
    group.add_argument('--sigma', type=float,
                       help='Standard deviation of every coordinate.')
    group.add_argument('--zipf-gamma', type=float,
                       help='Zipf exponent of the component sizes.')
    group.add_argument('--cube-side', type=float,
                       help='Side of the cube holding the means.')
    group.add_argument('--z', type=int,
                       help='Copies of the hard-instance block.')
    group.add_argument('--separation', type=float,
                       help='Smallest distance between hard-instance '
                            'locations.')
    group.add_argument('--growth', type=float,
                       help='Ratio of consecutive hard-instance distances.')


def build_parser(run_defaults: Optional[Dict[str, object]] = None
                 ) -> argparse.ArgumentParser:
    """Builds the parser; `run_defaults` replace the defaults of `run`."""

    parser = argparse.ArgumentParser(
        prog='distkm',
        description='Distributed k-means experiments in a simulated '
                    'coordinator model.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='Log progress (-v) or every round (-vv).')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    run = commands.add_parser('run', help='Run repeated experiments.')
    run.set_defaults(handler=run_command, parser=run)
    run.add_argument('--config', help='File of key=value defaults.')
    run.add_argument('--dataset',
                     help="'gaussian', 'hard' or the path of a CSV file.")
    run.add_argument('--algo', choices=_values(Algorithm))
    run.add_argument('--k', type=int, help='Number of clusters (required).')
    run.add_argument('--epsilon', type=float)
    run.add_argument('--delta', type=float)
    run.add_argument('--rounds', type=int,
                     help='Rounds of the seeding baseline.')
    run.add_argument('--oversampling', type=int,
                     help='Points selected per round by the seeding '
                          'baseline.')
    run.add_argument('--machines', type=int)
    run.add_argument('--reps', type=int)
    run.add_argument('--seed', type=int)
    run.add_argument('--constants-mode', choices=_values(ConstantsMode))
    run.add_argument('--sampling-mode', choices=_values(SamplingMode))
    run.add_argument('--capacity-constant', type=float)
    run.add_argument('--partition', choices=_values(PartitionStrategy))
    run.add_argument('--skew', type=float,
                     help='Exponent of the skewed partition.')
    run.add_argument('--workers', type=int,
                     help='Threads executing machine steps.')
    run.add_argument('--rep-workers', type=int,
                     help='Threads executing repetitions.')
    run.add_argument('--timing', choices=_values(TimingMode))
    run.add_argument('--blackbox-mode', choices=_values(ClusterMode))
    run.add_argument('--delimiter', help='CSV field delimiter.')
    run.add_argument('--header', action='store_true', default=None,
                     help='Skip the first CSV row.')
    run.add_argument('--columns', type=_columns,
                     help='Zero-based CSV columns, e.g. 0,2,3.')
    _add_generator_arguments(run)
    run.add_argument('--out', help='Output file, standard output if absent.')
    run.add_argument('--format', choices=_values(OutputFormat), default='csv')
    run.add_argument('--no-timing', action='store_true', default=None,
                     help='Leave out the timing columns.')
    if run_defaults:
        run.set_defaults(**run_defaults)

    gen = commands.add_parser('gen', help='Write a synthetic dataset.')
    gen.set_defaults(handler=gen_command, parser=gen)
    gen.add_argument('--hard-instance', action='store_true',
                     help='Write the hard instance instead of a Gaussian '
                          'mixture.')
    gen.add_argument('--k', type=int, help='Number of clusters (required).')
    gen.add_argument('--seed', type=int, default=0)
    _add_generator_arguments(gen)
    gen.add_argument('--delimiter', default=',')
    gen.add_argument('--out', required=True, help='Output CSV file.')

    constants = commands.add_parser(
        'constants', help='Print the derived constants.')
    constants.set_defaults(handler=constants_command, parser=constants)
    constants.add_argument('--k', type=int, required=True)
    constants.add_argument('--delta', type=float, default=0.1)
    constants.add_argument('--epsilon', type=float, default=0.05)
    constants.add_argument('--n', type=int, required=True)
    constants.add_argument('--constants-mode', choices=_values(ConstantsMode),
                           default=ConstantsMode.EXPERIMENT.value)
    constants.add_argument('--capacity-constant', type=float, default=36.0)

    return parser


def config_defaults(argv: Optional[List[str]]) -> Dict[str, object]:
    """Reads the file named by `--config` into defaults of `run`."""

    pre = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    pre.add_argument('--config')
    known, _ = pre.parse_known_args(argv)
    if known.config is None:
        return {}

    values = read_config_file(known.config)
    allowed = set(ExperimentConfig.field_names()) | {'out', 'format',
                                                     'no_timing'}
    unknown = sorted(set(values) - allowed)
    if unknown:
        raise ConfigError(f'Unknown keys in {known.config}: '
                          f'{", ".join(unknown)}.')

    for key in BOOLEAN_KEYS:
        if key in values:
            values[key] = _boolean(key, values[key])
    if values.get('format', 'csv') not in _values(OutputFormat):
        raise ConfigError(f"Invalid format: {values['format']!r}.")

    return values


def run_command(args: argparse.Namespace) -> int:
    if args.k is None:
        args.parser.error('the following arguments are required: --k')

    names = ExperimentConfig.field_names()
    config = ExperimentConfig(**{
        name: getattr(args, name) for name in names
        if getattr(args, name, None) is not None
    })

    rows = run_experiment(config)
    text = emit(rows, args.format, args.out, timing=not args.no_timing)
    if args.out is None:
        sys.stdout.write(text)
    else:
        logger.info('Wrote %d rows to %s.', len(rows), args.out)
    return 0


def gen_command(args: argparse.Namespace) -> int:
    if args.k is None:
        args.parser.error('the following arguments are required: --k')

    given = {name: getattr(args, name)
             for name in ('n', 'dim', 'sigma', 'zipf_gamma', 'cube_side',
                          'z', 'separation', 'growth')
             if getattr(args, name) is not None}

    if args.hard_instance:
        spec = HardInstanceSpec(k=args.k, **{
            key: value for key, value in given.items()
            if key in ('z', 'separation', 'growth')})
        generated = gen_hard_instance(spec)
    else:
        spec = GaussianMixtureSpec(k=args.k, seed=args.seed, **{
            key: value for key, value in given.items()
            if key in ('n', 'dim', 'sigma', 'zipf_gamma', 'cube_side')})
        generated = gen_gaussian_mixture(spec)

    save_csv(generated.dataset, args.out, args.delimiter)
    logger.info('Planted cost %.6g.', generated.cost)
    return 0


def constants_command(args: argparse.Namespace) -> int:
    params = SoccerParams(k=args.k, delta=args.delta, epsilon=args.epsilon,
                          constants_mode=args.constants_mode,
                          capacity_constant=args.capacity_constant)
    constants = derive_constants(params, args.n)

    lines = [
        ('eta', f'{constants.eta:.2f}'),
        ('p1_size', str(int(constants.eta))),
        ('log_arg', f'{constants.log_arg:.6g}'),
        ('d_k', f'{constants.d_k:.4f}'),
        ('k_plus', str(constants.k_plus)),
        ('truncation', str(constants.truncation)),
        ('d_k_prime', f'{constants.d_k_prime:.4f}'),
        ('k_plus_prime', str(constants.k_plus_prime)),
        ('round_bound', f'{constants.round_bound:.4g}'),
    ]
    for name, value in lines:
        print(f'{name:<13}{value}')
    return 0


def cli_main(argv: Optional[List[str]] = None) -> int:
    """Runs the command line and returns its exit code.

    Usage errors exit with 2 after printing the usage. Failures of a
    command are logged and exit with 1.
    """

    try:
        args = build_parser(config_defaults(argv)).parse_args(argv)
    except SystemExit as exc:
        return exc.code
    except (ConfigError, OSError) as exc:
        print(f'distkm: error: {exc}', file=sys.stderr)
        return 2

    logging.basicConfig(
        level=LOG_LEVELS[min(args.verbose, 2)],
        format='%(asctime)s %(levelname)s %(name)s: %(message)s')

    try:
        return args.handler(args)
    except SystemExit as exc:
        return exc.code
    except (ConfigError, DatasetError, ExperimentError, SoccerError,
            SimnetError, OSError) as exc:
        logger.error('%s', exc)
        print(f'distkm: error: {exc}', file=sys.stderr)
        return 1
