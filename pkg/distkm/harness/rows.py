from dataclasses import dataclass, fields
from typing import List, Optional, Sequence

import numpy as np


@dataclass
class ResultRow:
    """One line of an experiment table.

    A row either describes a single repetition, with every `_std` field
    zero and `rep_count` one, or aggregates several repetitions into means
    and population standard deviations.

    Attributes:
        dataset: The dataset name.
        algo: The algorithm.
        k: The number of clusters.
        epsilon: The capacity exponent, empty for the seeding baseline.
        rounds: The loop rounds, or the selection rounds of the baseline.
        output_size: The centers found before the reduction to `k`.
        cost: The cost of the dataset with the reduced centers.
        machine_time_s: The sum over rounds of the slowest machine.
        total_time_s: The elapsed time of the whole run.
        coord_points_received: The points sent to the coordinator.
        coord_points_broadcast: The points broadcast by the coordinator.
        rep_count: The number of repetitions described by the row.
        seed: The seed of the repetition, or the master seed of an aggregate.
    """

    dataset: str
    algo: str
    k: int
    epsilon: Optional[float]
    rounds: float
    rounds_std: float
    output_size: float
    output_size_std: float
    cost: float
    cost_std: float
    machine_time_s: float
    total_time_s: float
    coord_points_received: float
    coord_points_broadcast: float
    rep_count: int
    seed: int


FIELDS = tuple(f.name for f in fields(ResultRow))
TIMING_FIELDS = ('machine_time_s', 'total_time_s')


def _mean(rows: Sequence[ResultRow], name: str) -> float:
    return float(np.mean([getattr(row, name) for row in rows]))


def _std(rows: Sequence[ResultRow], name: str) -> float:
    return float(np.std([getattr(row, name) for row in rows]))


def aggregate(rows: List[ResultRow], seed: int) -> ResultRow:
    """Summarizes per-repetition rows by their means and standard
    deviations."""

    if not rows:
        raise ValueError('Cannot aggregate zero rows.')

    first = rows[0]
    return ResultRow(
        dataset=first.dataset,
        algo=first.algo,
        k=first.k,
        epsilon=first.epsilon,
        rounds=_mean(rows, 'rounds'),
        rounds_std=_std(rows, 'rounds'),
        output_size=_mean(rows, 'output_size'),
        output_size_std=_std(rows, 'output_size'),
        cost=_mean(rows, 'cost'),
        cost_std=_std(rows, 'cost'),
        machine_time_s=_mean(rows, 'machine_time_s'),
        total_time_s=_mean(rows, 'total_time_s'),
        coord_points_received=_mean(rows, 'coord_points_received'),
        coord_points_broadcast=_mean(rows, 'coord_points_broadcast'),
        rep_count=len(rows),
        seed=seed,
    )
