class SoccerError(Exception):
    """Base class for errors raised while running the round-reduction loop."""


class InvalidParametersError(SoccerError):
    """Raised when the parameters of a run are out of range."""


class DegenerateConstantsError(SoccerError):
    """Raised when the derived constants are meaningless for the parameters."""


class RoundLimitExceeded(SoccerError):
    """Raised when the loop keeps running past its round guard."""

    def __init__(self, rounds: int, remaining: int, capacity: float):
        super().__init__(f'Still {remaining} points after {rounds} rounds, '
                         f'the coordinator capacity is {capacity:.1f}.')
        self.rounds = rounds
        self.remaining = remaining
        self.capacity = capacity
