import functools


class Outcome:
    """The outcome of a computation that may have failed.

    Failures are kept as values, so that several independent computations
    can all finish before the first failure is reported.
    """

    def unwrap(self):
        """Returns the value of a success or raises the error of a failure."""
        raise NotImplementedError


class Success(Outcome):

    def __init__(self, value):
        self.value = value

    def __str__(self):
        return f'Success ({self.value})'

    def unwrap(self):
        return self.value


class Failure(Outcome):

    def __init__(self, error: Exception):
        self.error = error

    def __str__(self):
        return f'Failure "{type(self.error).__name__}: {self.error}"'

    def unwrap(self):
        raise self.error


def safe(func):
    """Makes `func` return a `Success` with its value or a `Failure` with
    the exception it raised.

    Examples:
        >>> safe(int)('42').unwrap()
        42
        >>> str(safe(int)('x'))
        'Failure "ValueError: invalid literal for int() with base 10: \\'x\\'"'
    """

    @functools.wraps(func)
    def decorated(*args, **kwargs):
        try:
            return Success(func(*args, **kwargs))
        except Exception as error:
            return Failure(error)

    return decorated
