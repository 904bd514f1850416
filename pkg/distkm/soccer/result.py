from dataclasses import dataclass, field
from typing import List

import numpy as np

from distkm.geometry import CenterSet
from distkm.simnet import CommLedger, RoundTimer
from distkm.soccer.params import DerivedConstants


@dataclass
class RoundRecord:
    """What happened in one loop round.

    Attributes:
        index: The round number, starting at 1.
        alpha: The sampling fraction `eta / N`.
        n_before: The live points at the start of the round.
        p1_size: The size of the clustered sample.
        p2_size: The size of the threshold sample.
        c_iter: The centers found in the round.
        v: The removal threshold.
        psi: `v * k * d_k / alpha`.
        removed_count: The number of removed points.
        removed_cost: The cost of the removed points with respect to `c_iter`.
        removed_indices: The global indices of the removed points.
        remaining_n: The live points at the end of the round.
    """

    index: int
    alpha: float
    n_before: int
    p1_size: int
    p2_size: int
    c_iter: CenterSet
    v: float
    psi: float
    removed_count: int
    removed_cost: float
    removed_indices: np.ndarray = field(repr=False)
    remaining_n: int


@dataclass
class SoccerResult:
    """The outcome of a run.

    Attributes:
        c_out: Every center found, the loop rounds' first and the final
            phase's last.
        reduced_centers: `c_out` reduced to at most `k` centers.
        final_cost: The cost of the whole dataset with `reduced_centers`.
        loop_rounds: The number of loop rounds.
        round_records: One record per loop round.
        constants: The derived constants of the run.
        final_centers: The centers found in the final phase.
        final_input_size: The number of points clustered in the final phase.
        final_phase_cost: The cost of those points with `final_centers`.
        ledger: The communication ledger.
        timer: The round timer.
    """

    c_out: CenterSet
    reduced_centers: CenterSet
    final_cost: float
    loop_rounds: int
    round_records: List[RoundRecord]
    constants: DerivedConstants
    final_centers: CenterSet
    final_input_size: int
    final_phase_cost: float
    ledger: CommLedger
    timer: RoundTimer

    @property
    def total_rounds(self) -> int:
        """The loop rounds plus the final phase."""
        return self.loop_rounds + 1

    @property
    def output_size(self) -> int:
        return len(self.c_out)
