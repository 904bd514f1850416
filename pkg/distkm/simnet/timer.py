from enum import Enum
from typing import Dict, List, Mapping


class TimingMode(Enum):
    """How the cost of a machine step is measured.

    `WALL` measures elapsed seconds with a monotonic clock. `WORK` counts
    the distance evaluations a machine charges to itself, which makes the
    reported machine time exactly reproducible.
    """

    WALL = 'wall'
    WORK = 'work'


class RoundTimer:
    """Accumulates per-machine and coordinator time round by round.

    The machine time of a round is the time of its slowest machine, as all
    machines run in parallel and the round ends when the last one finishes.
    Several steps inside one round add up per machine before the maximum is
    taken. The total machine time is the sum of these maxima over rounds.
    """

    def __init__(self, mode: TimingMode = TimingMode.WALL):
        self.mode = TimingMode(mode)
        self.machine_times: List[Dict[int, float]] = []
        self.coordinator_times: List[float] = []

    def __repr__(self):
        return f'RoundTimer(' \
               f'mode={self.mode.value}, ' \
               f'rounds={len(self.machine_times)}' \
               f')'

    def open_round(self):
        self.machine_times.append({})
        self.coordinator_times.append(0.0)

    def _ensure_round(self):
        if not self.machine_times:
            self.open_round()

    def record_machines(self, times: Mapping[int, float]):
        self._ensure_round()
        current = self.machine_times[-1]
        for machine_id, value in times.items():
            current[machine_id] = current.get(machine_id, 0.0) + float(value)

    def record_coordinator(self, seconds: float):
        self._ensure_round()
        self.coordinator_times[-1] += float(seconds)

    @property
    def round_maxima(self) -> List[float]:
        return [max(times.values(), default=0.0) for times in self.machine_times]

    @property
    def machine_time(self) -> float:
        return float(sum(self.round_maxima))

    @property
    def coordinator_time(self) -> float:
        return float(sum(self.coordinator_times))
