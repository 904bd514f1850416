from typing import Any, Dict, List, Optional

import numpy as np

from distkm.geometry import Dataset


class MachineState:
    """The local state of one simulated machine.

    A machine starts with its `original` shard and keeps the points that are
    still alive in `shard`. Points leave the shard in two ways: they are
    removed by a round (and recorded in `removed`) or surrendered to the
    coordinator in the final phase (and recorded in `surrendered`). The
    global indices of live, removed and surrendered points always partition
    the indices of the original shard.

    Attributes:
        id: The machine identifier, `0` to `m - 1`.
        shard: The live local points.
        original: The points the machine was created with.
        rng: The machine's private random generator.
        removed: Index arrays of the points removed in each round.
        surrendered: Indices of the points sent away in the final phase.
        work: Distance evaluations charged to the machine.
        received: The last payload broadcast by the coordinator.
        memory: Values a machine keeps between the steps of one round.
    """

    def __init__(self, id: int, shard: Dataset, rng: np.random.Generator):
        self.id = id
        self.shard = shard
        self.original = shard
        self.rng = rng
        self.removed: List[np.ndarray] = []
        self.surrendered = np.empty(0, dtype=np.int64)
        self.work = 0
        self.received: Optional[object] = None
        self.memory: Dict[str, Any] = {}

    def __repr__(self):
        return f'MachineState(' \
               f'id={self.id}, ' \
               f'live={len(self.shard)}, ' \
               f'original={len(self.original)}' \
               f')'

    @property
    def live_count(self) -> int:
        return len(self.shard)

    @property
    def removed_count(self) -> int:
        return sum(len(indices) for indices in self.removed)

    def charge(self, evaluations: int):
        """Adds distance evaluations to the machine's work counter."""
        self.work += int(evaluations)

    def retain(self, keep: np.ndarray) -> Dataset:
        """Keeps the live points where `keep` is true and removes the rest.

        Returns:
            The removed points, in shard order.
        """

        keep = np.asarray(keep, dtype=bool)
        if keep.shape != (len(self.shard),):
            raise ValueError(f'Expected a mask of {len(self.shard)} entries, '
                             f'got shape {keep.shape}.')

        dropped = self.shard.mask(~keep)
        self.shard = self.shard.mask(keep)
        self.removed.append(dropped.indices)
        return dropped

    def surrender(self) -> Dataset:
        """Hands every live point over to the coordinator."""

        sent = self.shard
        self.surrendered = np.concatenate([self.surrendered, sent.indices])
        self.shard = Dataset.empty(sent.dim)
        return sent
