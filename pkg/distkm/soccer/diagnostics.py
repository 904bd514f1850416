from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from distkm.geometry import Dataset, CenterSet, cost
from distkm.soccer.result import SoccerResult


def guarantee_checks(result: SoccerResult) -> Dict[str, bool]:
    """Checks the round, size and communication guarantees of a run.

    The round bound only holds with high probability and only for the
    theory-mode constants; the other three hold on every run.

    Returns:
        A mapping from check name to whether it holds:
            `rounds`: fewer than `1 / epsilon - 1` loop rounds.
            `output_size`: `|C_out| <= total_rounds * k_plus`.
            `received`: every loop round received exactly `|P1| + |P2|`
                points.
            `broadcast`: every loop round broadcast exactly `|C_iter|`
                points.
    """

    loop = [r for r in result.ledger.rounds if r.phase == 'loop']
    records = result.round_records

    return {
        'rounds': result.loop_rounds < result.constants.round_bound,
        'output_size':
            len(result.c_out) <= result.total_rounds * result.constants.k_plus,
        'received': len(loop) == len(records) and all(
            traffic.points_to_coordinator == record.p1_size + record.p2_size
            for traffic, record in zip(loop, records)),
        'broadcast': len(loop) == len(records) and all(
            traffic.points_broadcast == len(record.c_iter)
            for traffic, record in zip(loop, records)),
    }


def decomposition_bound(result: SoccerResult) -> float:
    """Returns the sum of every removed set's cost with its round's centers
    and the final phase's cost.

    The removed sets and the final input partition the dataset, and every
    set of centers involved is part of `C_out`, so `cost(X, C_out)` never
    exceeds this bound.
    """

    removed = sum(record.removed_cost for record in result.round_records)
    return float(removed + result.final_phase_cost)


@dataclass
class RemovalCheck:
    """Per-round checks of the removal guarantees against a reference
    clustering.

    Attributes:
        index: The round number.
        removed_cost: The cost of the removed points with the round's centers.
        removed_bound: `(80 * beta + 44)` times the cost of the round's live
            points with the reference centers.
        remaining: The live points after the round.
        remaining_bound: `5.5 * k * d_k / alpha`.
    """

    index: int
    removed_cost: float
    removed_bound: float
    remaining: int
    remaining_bound: float

    @property
    def holds(self) -> bool:
        return self.removed_cost <= self.removed_bound \
            and self.remaining <= self.remaining_bound


def removal_checks(data: Dataset,
                   result: SoccerResult,
                   reference: CenterSet,
                   beta: float) -> List[RemovalCheck]:
    """Evaluates the per-round removal guarantees of a run.

    Args:
        data: The clustered dataset. Its indices must be the ones the run
            saw.
        result: The run.
        reference: Centers standing in for the optimum, e.g. the planted
            centers of a synthetic dataset.
        beta: The approximation factor of the black box, e.g. an empirical
            estimate.
    """

    live = np.ones(len(data), dtype=bool)
    position = {index: pos for pos, index in enumerate(data.indices.tolist())}

    checks = []
    for record in result.round_records:
        reference_cost = cost(data.mask(live), reference)
        constants = result.constants

        checks.append(RemovalCheck(
            index=record.index,
            removed_cost=record.removed_cost,
            removed_bound=(80 * beta + 44) * reference_cost,
            remaining=record.remaining_n,
            remaining_bound=5.5 * constants.k * constants.d_k / record.alpha,
        ))

        live[[position[i] for i in record.removed_indices.tolist()]] = False

    return checks
