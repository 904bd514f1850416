from dataclasses import dataclass, fields
from typing import List, Optional


@dataclass
class RoundTraffic:
    """The traffic of one round, or a total over several rounds."""

    phase: str
    points_to_coordinator: int = 0
    scalars_to_coordinator: int = 0
    points_broadcast: int = 0
    scalars_broadcast: int = 0

    def __add__(self, other: 'RoundTraffic') -> 'RoundTraffic':
        phase = self.phase if self.phase == other.phase else 'total'
        return RoundTraffic(phase, **{
            f.name: getattr(self, f.name) + getattr(other, f.name)
            for f in fields(self) if f.name != 'phase'
        })


class CommLedger:
    """Counts the points and scalars exchanged with the coordinator.

    Traffic is recorded into the round that was opened last. A broadcast is
    counted once, not once per receiving machine, and the coordinator's
    own computation is free.

    Examples:
        >>> ledger = CommLedger()
        >>> _ = ledger.open_round('loop')
        >>> ledger.record_gather(points=7)
        >>> _ = ledger.open_round('loop')
        >>> ledger.record_gather(points=5)
        >>> ledger.points_to_coordinator
        12
    """

    def __init__(self):
        self.rounds: List[RoundTraffic] = []

    def __repr__(self):
        return f'CommLedger(' \
               f'rounds={len(self.rounds)}, ' \
               f'points_to_coordinator={self.points_to_coordinator}, ' \
               f'points_broadcast={self.points_broadcast}' \
               f')'

    def open_round(self, phase: str) -> RoundTraffic:
        traffic = RoundTraffic(phase)
        self.rounds.append(traffic)
        return traffic

    @property
    def current(self) -> RoundTraffic:
        if not self.rounds:
            return self.open_round('round')
        return self.rounds[-1]

    def record_gather(self, points: int = 0, scalars: int = 0):
        self.current.points_to_coordinator += int(points)
        self.current.scalars_to_coordinator += int(scalars)

    def record_broadcast(self, points: int = 0, scalars: int = 0):
        self.current.points_broadcast += int(points)
        self.current.scalars_broadcast += int(scalars)

    def total(self, phase: Optional[str] = None) -> RoundTraffic:
        """Sums the traffic of every round, or of the rounds of one phase."""

        result = RoundTraffic(phase or 'total')
        for traffic in self.rounds:
            if phase is None or traffic.phase == phase:
                result = result + traffic
        result.phase = phase or 'total'
        return result

    def count(self, phase: Optional[str] = None) -> int:
        """Returns the number of rounds, optionally of one phase only."""
        return sum(phase is None or r.phase == phase for r in self.rounds)

    @property
    def points_to_coordinator(self) -> int:
        return sum(r.points_to_coordinator for r in self.rounds)

    @property
    def scalars_to_coordinator(self) -> int:
        return sum(r.scalars_to_coordinator for r in self.rounds)

    @property
    def points_broadcast(self) -> int:
        return sum(r.points_broadcast for r in self.rounds)

    @property
    def scalars_broadcast(self) -> int:
        return sum(r.scalars_broadcast for r in self.rounds)
