class ConfigError(Exception):
    """Raised when an experiment is configured inconsistently."""


class ExperimentError(Exception):
    """Raised when a repetition of an experiment fails."""

    def __init__(self, rep: int, error: Exception):
        super().__init__(f'Repetition {rep} failed: '
                         f'{type(error).__name__}: {error}')
        self.rep = rep
        self.error = error
