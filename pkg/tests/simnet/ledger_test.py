from distkm.simnet import CommLedger, RoundTimer, TimingMode


def test_ledger_accumulates_over_rounds():
    """Test that gathered points add up over rounds."""

    ledger = CommLedger()
    ledger.open_round('loop')
    ledger.record_gather(points=3)
    ledger.record_gather(points=4)
    ledger.open_round('loop')
    ledger.record_gather(points=5)

    assert [r.points_to_coordinator for r in ledger.rounds] == [7, 5]
    assert ledger.points_to_coordinator == 12


def test_ledger_totals_by_phase():
    """Test that totals can be restricted to one phase."""

    ledger = CommLedger()
    ledger.open_round('loop')
    ledger.record_gather(points=10, scalars=2)
    ledger.record_broadcast(points=4, scalars=1)
    ledger.open_round('final')
    ledger.record_gather(points=6)

    assert ledger.total('loop').points_to_coordinator == 10
    assert ledger.total('loop').scalars_broadcast == 1
    assert ledger.total('final').points_to_coordinator == 6
    assert ledger.total().points_to_coordinator == 16
    assert ledger.total().points_broadcast == 4
    assert ledger.count() == 2
    assert ledger.count('final') == 1


def test_ledger_opens_a_round_when_needed():
    """Test that traffic before any round goes into an implicit round."""

    ledger = CommLedger()
    ledger.record_broadcast(points=2)

    assert ledger.count() == 1
    assert ledger.points_broadcast == 2


def test_timer_sums_the_slowest_machine_of_each_round():
    """Test that machine time is the sum over rounds of the maximum."""

    timer = RoundTimer(TimingMode.WORK)
    timer.open_round()
    timer.record_machines({0: 1.0, 1: 3.0})
    timer.record_machines({0: 4.0, 1: 0.5})
    timer.open_round()
    timer.record_machines({0: 2.0, 1: 1.0})
    timer.record_coordinator(0.25)

    assert timer.round_maxima == [5.0, 2.0]
    assert timer.machine_time == 7.0
    assert timer.coordinator_time == 0.25
