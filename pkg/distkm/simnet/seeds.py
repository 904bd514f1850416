from typing import List, Sequence, Union

import numpy as np
from numpy.random import Generator, SeedSequence


def seed_sequences(seed: Union[int, Sequence[int], SeedSequence],
                   count: int) -> List[SeedSequence]:
    """Splits a seed into `count` independent child sequences.

    The i-th child depends only on the seed and on i, so a machine keeps the
    same stream no matter how many workers execute the rounds.
    """

    if not isinstance(seed, SeedSequence):
        seed = SeedSequence(seed)
    return seed.spawn(count)


def rng_streams(seed: Union[int, Sequence[int], SeedSequence],
                count: int) -> List[Generator]:
    """Returns `count` independent generators derived from `seed`."""
    return [np.random.default_rng(child) for child in seed_sequences(seed, count)]


def mix_seed(master: int, index: int) -> int:
    """Combines a master seed with an index into a new 63-bit seed.

    The value is the first 64-bit word of `SeedSequence([master, index])`
    with its top bit cleared, so it is stable across platforms and numpy
    versions that keep the `SeedSequence` hashing.

    Examples:
        >>> mix_seed(7, 0) == mix_seed(7, 0)
        True
        >>> mix_seed(7, 0) == mix_seed(7, 1)
        False
    """

    word = SeedSequence([int(master), int(index)]).generate_state(1, np.uint64)[0]
    return int(word) & ((1 << 63) - 1)
