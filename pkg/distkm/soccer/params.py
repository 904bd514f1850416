import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from distkm.soccer.errors import InvalidParametersError, \
    DegenerateConstantsError


class ConstantsMode(Enum):
    """Which argument the logarithm in the derived constants uses.

    `THEORY` uses `1.1k / (delta * epsilon)`, the form under which the round
    and size guarantees hold. `EXPERIMENT` uses `1.1k / delta`, the form
    that reproduces the published coordinator sample sizes.
    """

    EXPERIMENT = 'experiment'
    THEORY = 'theory'


class SamplingMode(Enum):
    """How machines draw the two samples of a round.

    `EXACT_FRACTION` draws two independent uniform subsets of
    `round(alpha * N_j)` points. `BERNOULLI` keeps each point independently
    with probability `alpha`, once per sample. `MULTINOMIAL` lets the
    coordinator split `round(alpha * N)` among machines by a multinomial
    draw over the live counts, so each sample has exactly an `alpha`
    fraction of all live points.
    """

    EXACT_FRACTION = 'exact_fraction'
    BERNOULLI = 'bernoulli'
    MULTINOMIAL = 'multinomial'


@dataclass(frozen=True)
class SoccerParams:
    """Parameters of a run.

    Attributes:
        k: The number of clusters, at least 2. The guarantees assume `k >= 5`.
        delta: The failure probability, in `(0, 1)`.
        epsilon: The capacity exponent, in `(0, 1)`. The coordinator can
            cluster about `n ** epsilon` times more than `k` points.
        constants_mode: The logarithm argument of the derived constants.
        sampling_mode: How machines sample.
        max_loop_rounds_guard: The number of loop rounds after which a run
            that has not reached the coordinator capacity fails. Defaults to
            `ceil(1 / epsilon) + 2`.
        capacity_constant: The leading constant of the coordinator capacity.
    """

    k: int
    delta: float = 0.1
    epsilon: float = 0.05
    constants_mode: ConstantsMode = ConstantsMode.EXPERIMENT
    sampling_mode: SamplingMode = SamplingMode.EXACT_FRACTION
    max_loop_rounds_guard: Optional[int] = None
    capacity_constant: float = 36.0

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 2:
            raise InvalidParametersError(f'The number of clusters must be an '
                                         f'integer of at least 2, '
                                         f'got {self.k}.')
        if not 0 < self.delta < 1:
            raise InvalidParametersError(f'delta must lie in (0, 1), '
                                         f'got {self.delta}.')
        if not 0 < self.epsilon < 1:
            raise InvalidParametersError(f'epsilon must lie in (0, 1), '
                                         f'got {self.epsilon}.')
        if not self.capacity_constant > 0:
            raise InvalidParametersError(f'The capacity constant must be '
                                         f'positive, got '
                                         f'{self.capacity_constant}.')
        if self.max_loop_rounds_guard is not None \
                and self.max_loop_rounds_guard < 1:
            raise InvalidParametersError(f'The round guard must be positive, '
                                         f'got {self.max_loop_rounds_guard}.')

        try:
            object.__setattr__(self, 'constants_mode',
                               ConstantsMode(self.constants_mode))
            object.__setattr__(self, 'sampling_mode',
                               SamplingMode(self.sampling_mode))
        except ValueError as exc:
            raise InvalidParametersError(str(exc)) from exc
        object.__setattr__(self, 'k', int(self.k))

    @property
    def round_guard(self) -> int:
        if self.max_loop_rounds_guard is not None:
            return self.max_loop_rounds_guard
        return math.ceil(1 / self.epsilon) + 2

    @property
    def within_guarantee(self) -> bool:
        return self.k >= 5


@dataclass(frozen=True)
class DerivedConstants:
    """Constants derived from the parameters and the dataset size.

    Attributes:
        k: The number of clusters.
        eta: The coordinator capacity, `c * k * n ** epsilon * ln(log_arg)`.
        d_k: `6.5 * ln(log_arg)`, which scales the removal threshold.
        k_plus: `floor(k + 9 * ln(log_arg))`, the number of centers asked
            from the black box in each round.
        log_arg: The argument of the logarithm.
        truncation: `floor(1.5 * (k + 1) * d_k)`, the number of sample points
            ignored when the threshold is computed.
        d_k_prime: `d_k` with `epsilon = 1`.
        k_plus_prime: `k_plus` with `epsilon = 1`.
        round_bound: `1 / epsilon - 1`, the bound on the loop rounds.
    """

    k: int
    eta: float
    d_k: float
    k_plus: int
    log_arg: float
    truncation: int
    d_k_prime: float
    k_plus_prime: int
    round_bound: float


def derive_constants(params: SoccerParams, n: int) -> DerivedConstants:
    """Derives the capacity and the round constants for `n` points.

    Logarithms are natural.

    Raises:
        InvalidParametersError: Raised when `n` is not positive.
        DegenerateConstantsError: Raised when the logarithm argument is at
            most one.

    Examples:
        >>> constants = derive_constants(SoccerParams(k=25), 10 ** 7)
        >>> math.floor(constants.eta)
        11316
        >>> constants.k_plus
        75
    """

    if n < 1:
        raise InvalidParametersError(f'The dataset size must be positive, '
                                     f'got {n}.')

    k, delta, epsilon = params.k, params.delta, params.epsilon

    prime_arg = 1.1 * k / delta
    if params.constants_mode is ConstantsMode.THEORY:
        log_arg = 1.1 * k / (delta * epsilon)
    else:
        log_arg = prime_arg

    if log_arg <= 1:
        raise DegenerateConstantsError(f'The logarithm argument {log_arg} '
                                       f'must exceed one.')

    log = math.log(log_arg)
    d_k = 6.5 * log

    return DerivedConstants(
        k=k,
        eta=params.capacity_constant * k * n ** epsilon * log,
        d_k=d_k,
        k_plus=math.floor(k + 9 * log),
        log_arg=log_arg,
        truncation=math.floor(1.5 * (k + 1) * d_k),
        d_k_prime=6.5 * math.log(prime_arg),
        k_plus_prime=math.floor(k + 9 * math.log(prime_arg)),
        round_bound=1 / epsilon - 1,
    )
