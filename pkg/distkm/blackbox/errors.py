class BlackBoxError(Exception):
    """Base class for errors raised by the centralized black box."""


class EmptyDatasetError(BlackBoxError):
    """Raised when the black box is asked to cluster no points."""


class InstanceTooLargeError(BlackBoxError):
    """Raised when an exhaustive search is requested on too many points."""
