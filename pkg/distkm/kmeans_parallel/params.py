from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class KmppParams:
    """Parameters of the distributed seeding baseline.

    Attributes:
        k: The number of clusters, at least 2.
        rounds: The number of selection rounds. Zero keeps only the initial
            point.
        oversampling: The number of points selected per round. Defaults to
            `2 * k`.
    """

    k: int
    rounds: int = 5
    oversampling: Optional[int] = None

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 2:
            raise ValueError(f'The number of clusters must be an integer '
                             f'of at least 2, got {self.k}.')
        if self.rounds < 0:
            raise ValueError(f'The number of rounds must be nonnegative, '
                             f'got {self.rounds}.')
        if self.oversampling is not None and self.oversampling < 1:
            raise ValueError(f'The oversampling must be positive, '
                             f'got {self.oversampling}.')

    @property
    def l(self) -> int:
        if self.oversampling is None:
            return 2 * self.k
        return self.oversampling
