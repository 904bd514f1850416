class SimnetError(Exception):
    """Base class for errors raised by the simulated network."""


class PartitionError(SimnetError):
    """Raised when a dataset cannot be split among the requested machines."""


class MachineStepError(SimnetError):
    """Raised when a machine fails while executing a step of a round."""

    def __init__(self, machine_id: int, message: str):
        super().__init__(f'Machine {machine_id}: {message}')
        self.machine_id = machine_id
