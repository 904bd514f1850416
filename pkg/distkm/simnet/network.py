import logging
import time
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Union

import numpy as np
from numpy.random import SeedSequence

from distkm.geometry import Dataset, CenterSet
from distkm.simnet.errors import PartitionError, MachineStepError
from distkm.simnet.ledger import CommLedger, RoundTraffic
from distkm.simnet.machine import MachineState
from distkm.simnet.seeds import seed_sequences
from distkm.simnet.timer import RoundTimer, TimingMode


logger = logging.getLogger(__name__)


class PartitionStrategy(Enum):
    """How a dataset is split among machines.

    `UNIFORM_RANDOM` shuffles the points and deals equal-sized shards.
    `CONTIGUOUS` deals equal-sized runs of the input order, which keeps any
    structure the order carries. `SKEWED` shuffles and gives machine `j` a
    share proportional to `(j + 1) ** -gamma`.
    """

    UNIFORM_RANDOM = 'uniform_random'
    CONTIGUOUS = 'contiguous'
    SKEWED = 'skewed'


def skewed_sizes(n: int, m: int, gamma: float) -> np.ndarray:
    """Splits `n` into `m` sizes proportional to `(j + 1) ** -gamma`.

    Sizes are rounded by largest remainder, so they always sum to `n`.

    Examples:
        >>> skewed_sizes(300, 2, 1.0).tolist()
        [200, 100]
    """

    if gamma < 0:
        raise PartitionError(f'The skew exponent must be nonnegative, '
                             f'got {gamma}.')

    shares = np.arange(1, m + 1, dtype=np.float64) ** -gamma
    exact = n * shares / shares.sum()
    sizes = np.floor(exact).astype(np.int64)

    remainder = n - int(sizes.sum())
    order = np.argsort(-(exact - sizes), kind='stable')
    sizes[order[:remainder]] += 1
    return sizes


def partition(data: Dataset,
              m: int,
              strategy: Union[PartitionStrategy, str] = PartitionStrategy.UNIFORM_RANDOM,
              seed: Union[int, SeedSequence] = 0,
              gamma: float = 1.0) -> List[MachineState]:
    """Splits `data` among `m` machines.

    Every machine receives its own random generator. The generators and the
    shuffle are derived from `seed`, so the same seed gives the same shards
    and the same machine streams.

    Args:
        data: The points to distribute.
        m: The number of machines, at least one and at most `len(data)`.
        strategy: The partition strategy.
        seed: The seed of the shuffle and of the machine generators.
        gamma: The skew exponent of `PartitionStrategy.SKEWED`.

    Returns:
        `m` machines whose shards are a disjoint cover of `data`.

    Raises:
        PartitionError: Raised when `m` is out of range.
    """

    strategy = PartitionStrategy(strategy)
    if m < 1:
        raise PartitionError(f'At least one machine is needed, got {m}.')
    if m > len(data):
        raise PartitionError(f'Cannot split {len(data)} points '
                             f'among {m} machines.')

    shuffle_seed, machines_seed = seed_sequences(seed, 2)
    shuffle = np.random.default_rng(shuffle_seed)

    if strategy is PartitionStrategy.CONTIGUOUS:
        order = np.arange(len(data))
    else:
        order = shuffle.permutation(len(data))

    if strategy is PartitionStrategy.SKEWED:
        sizes = skewed_sizes(len(data), m, gamma)
        shards = np.split(order, np.cumsum(sizes)[:-1])
    else:
        shards = np.array_split(order, m)

    streams = seed_sequences(machines_seed, m)
    return [
        MachineState(machine_id,
                     data.take(positions),
                     np.random.default_rng(stream))
        for machine_id, (positions, stream) in enumerate(zip(shards, streams))
    ]


@dataclass(frozen=True)
class Broadcast:
    """A payload sent by the coordinator to every machine."""

    centers: CenterSet
    scalars: tuple = ()


class Network:
    """A coordinator together with the machines it talks to.

    The network is the only way machines and the coordinator exchange data:
    `gather` and `gather_scalars` move payloads to the coordinator and
    `broadcast` sends one payload to all machines. Everything that crosses
    is counted in `ledger`, and every machine step is timed in `timer`.

    Machine steps may run on a pool of `workers` threads. Each machine only
    touches its own state and generator, and results are always collected in
    machine-id order, so the number of workers never changes the results.

    Attributes:
        machines: The machines, ordered by id.
        ledger: The communication ledger.
        timer: The per-round machine and coordinator timer.
        workers: The number of threads executing machine steps.
    """

    def __init__(self,
                 machines: Sequence[MachineState],
                 workers: int = 1,
                 timing: Union[TimingMode, str] = TimingMode.WALL):
        if not machines:
            raise PartitionError('A network needs at least one machine.')
        if workers < 1:
            raise ValueError(f'The number of workers must be positive, '
                             f'got {workers}.')

        self.machines = list(machines)
        self.dim = self.machines[0].original.dim
        self.workers = workers
        self.ledger = CommLedger()
        self.timer = RoundTimer(timing)

    @classmethod
    def from_dataset(cls,
                     data: Dataset,
                     m: int,
                     strategy: Union[PartitionStrategy, str] = PartitionStrategy.UNIFORM_RANDOM,
                     seed: Union[int, SeedSequence] = 0,
                     gamma: float = 1.0,
                     workers: int = 1,
                     timing: Union[TimingMode, str] = TimingMode.WALL) -> 'Network':
        return cls(partition(data, m, strategy, seed, gamma), workers, timing)

    def __repr__(self):
        return f'Network(' \
               f'm={len(self.machines)}, ' \
               f'live={self.live_count}, ' \
               f'workers={self.workers}' \
               f')'

    @property
    def m(self) -> int:
        return len(self.machines)

    @property
    def live_count(self) -> int:
        return sum(machine.live_count for machine in self.machines)

    @property
    def live_sizes(self) -> List[int]:
        return [machine.live_count for machine in self.machines]

    def open_round(self, phase: str) -> RoundTraffic:
        """Starts a new communication round labelled with `phase`."""

        self.timer.open_round()
        traffic = self.ledger.open_round(phase)
        logger.debug('Opened %s round %d with %d live points.',
                     phase, len(self.ledger.rounds), self.live_count)
        return traffic

    def gather(self, payloads: Mapping[int, Dataset]) -> Dataset:
        """Sends point payloads to the coordinator.

        Args:
            payloads: The points each machine sends, keyed by machine id.

        Returns:
            The payloads concatenated in machine-id order.
        """

        ordered = [payloads[machine_id] for machine_id in sorted(payloads)]
        received = Dataset.concat(ordered, self.dim)
        self.ledger.record_gather(points=len(received))
        return received

    def gather_scalars(self, payloads: Mapping[int, Any]) -> List[np.ndarray]:
        """Sends scalar payloads to the coordinator.

        Returns:
            One flat array per machine, in machine-id order.
        """

        ordered = [np.atleast_1d(np.asarray(payloads[machine_id]))
                   for machine_id in sorted(payloads)]
        self.ledger.record_gather(scalars=sum(v.size for v in ordered))
        return ordered

    def broadcast(self,
                  centers: Optional[CenterSet] = None,
                  scalars: Sequence[float] = ()) -> Broadcast:
        """Sends the same payload to every machine.

        The payload is counted once, however many machines receive it.
        """

        if centers is None:
            centers = CenterSet.empty(self.dim)

        payload = Broadcast(centers, tuple(scalars))
        for machine in self.machines:
            machine.received = payload

        self.ledger.record_broadcast(points=len(centers),
                                     scalars=len(payload.scalars))
        return payload

    def _run(self, step: Callable, machine: MachineState):
        work = machine.work
        start = time.perf_counter()
        try:
            result = step(machine=machine)
        except Exception as exc:
            raise MachineStepError(machine.id, str(exc)) from exc
        elapsed = time.perf_counter() - start

        if self.timer.mode is TimingMode.WORK:
            elapsed = float(machine.work - work)
        return result, elapsed

    def timed_machine_step(self, step: Callable) -> Dict[int, Any]:
        """Runs `step` on every machine and records the time it took.

        Args:
            step: A callable completed with `step(machine=machine)`, usually
                a `MachineStep` with the round's payload bound.

        Returns:
            The result of every machine, keyed by machine id in id order.

        Raises:
            MachineStepError: Raised for the failing machine with the lowest
                id. The round is not recorded.
        """

        if self.workers == 1:
            outcomes = []
            for machine in self.machines:
                outcomes.append(self._run(step, machine))
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                futures = [pool.submit(self._run, step, machine)
                           for machine in self.machines]
            outcomes = [future.result() for future in futures]

        self.timer.record_machines({
            machine.id: elapsed
            for machine, (_, elapsed) in zip(self.machines, outcomes)
        })
        return {
            machine.id: result
            for machine, (result, _) in zip(self.machines, outcomes)
        }

    @contextmanager
    def coordinator_step(self):
        """Times the coordinator's work inside the `with` block."""

        start = time.perf_counter()
        try:
            yield
        finally:
            self.timer.record_coordinator(time.perf_counter() - start)

    def conservation_holds(self) -> bool:
        """Checks that live, removed and surrendered points partition the
        original points of every machine."""

        for machine in self.machines:
            parts = [machine.shard.indices, machine.surrendered, *machine.removed]
            seen = np.sort(np.concatenate(parts))
            if not np.array_equal(seen, np.sort(machine.original.indices)):
                return False
        return True
