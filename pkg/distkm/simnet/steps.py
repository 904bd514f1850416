import functools
import inspect
from typing import Callable, Any


class MachineStep:
    """A machine-side operation waiting for some of its arguments.

    Defines `__call__` in the following way:
        1. If the underlying `func` can be called with the accumulated
           arguments, then it is called and its value returned.
        2. If the arguments can only partially be bound to `func`, then a
           new `MachineStep` holding them is returned.
        3. Otherwise, an exception is thrown.

    The coordinator uses this to bind the broadcast payload of a round to an
    operation and to hand the resulting step to the network, which completes
    it once per machine with `step(machine=machine)`.

    Examples:
        from distkm.soccer import machine_remove

        # Returns `MachineStep(func=machine_remove, args=[],
        # kwargs=['c_iter', 'v'])` since `machine` has not been bound yet.
        step = machine_remove(c_iter=c_iter, v=4.0)

        # Calls `machine_remove(machine, c_iter, 4.0)` and returns the
        # machine's `Removal`.
        removal = step(machine=machine)
    """

    def __init__(self, func: Callable, args: Any, kwargs: Any):
        self._func = func
        self._args = args
        self._kwargs = kwargs
        functools.update_wrapper(self, func)

    def __repr__(self):
        return f'MachineStep(' \
               f'func={self._func.__name__}, ' \
               f'args={repr(self._args)}, ' \
               f'kwargs={sorted(self._kwargs)}' \
               f')'

    @property
    def bound(self) -> dict:
        """The keyword arguments bound so far."""
        return dict(self._kwargs)

    def __call__(self, *args, **kwargs):
        if args and self._kwargs:
            raise ValueError('Cannot use `args` when '
                             '`kwargs` have been specified.')
        for key in kwargs:
            if key in self._kwargs:
                raise ValueError(f'Key {key} has already been specified.')

        args = self._args + list(args)
        kwargs.update(self._kwargs)

        signature = inspect.signature(self._func)

        try:
            signature.bind(*args, **kwargs)
        except TypeError:
            # Raises when the arguments cannot even partially be bound.
            signature.bind_partial(*args, **kwargs)
            return MachineStep(self._func, args, kwargs)
        else:
            return self._func(*args, **kwargs)


def machine_step(func: Callable) -> MachineStep:
    """Turns `func` into a `MachineStep` that waits for its arguments.

    A fully applied call runs `func` directly, so decorated operations can
    still be used as plain functions.

    Examples:
        @machine_step
        def machine_count(machine):
            return machine.live_count

        machine_count(machine)                    # Runs immediately.
        network.timed_machine_step(machine_count) # Runs on every machine.
    """
    return MachineStep(func, [], {})
