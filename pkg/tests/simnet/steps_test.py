import pytest

from distkm.simnet import MachineStep, machine_step


@machine_step
def scaled_count(machine, factor, offset=0):
    """Multiplies the machine's value."""
    return machine * factor + offset


def test_machine_step_runs_when_fully_applied():
    """Test that a fully applied step runs immediately."""

    assert scaled_count(3, 2) == 6
    assert scaled_count(3, 2, offset=1) == 7


def test_machine_step_waits_for_the_machine():
    """Test that binding the payload only returns a step that is completed
    by `machine=`."""

    step = scaled_count(factor=10)

    assert isinstance(step, MachineStep)
    assert step.bound == {'factor': 10}
    assert step(machine=4) == 40
    assert step(machine=5) == 50


def test_machine_step_keeps_metadata():
    """Test that the decorated step keeps the name and docstring."""

    assert scaled_count.__name__ == 'scaled_count'
    assert scaled_count.__doc__ == 'Multiplies the machine\'s value.'


def test_machine_step_raising_error():
    """Test that a step rejects repeated and unknown arguments."""

    step = scaled_count(factor=10)

    with pytest.raises(ValueError, match='already been specified'):
        step(factor=2)
    with pytest.raises(ValueError, match='Cannot use `args`'):
        step(1)
    with pytest.raises(TypeError):
        scaled_count(1, 2, 3, 4)
    with pytest.raises(TypeError):
        scaled_count(unknown=1)
