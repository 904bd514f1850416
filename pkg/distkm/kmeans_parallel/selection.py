from dataclasses import dataclass
from typing import Dict, Mapping, Sequence, Tuple

import numpy as np

from distkm.geometry import Dataset, CenterSet, sq_dists_to_set
from distkm.simnet import MachineState, machine_step


def weighted_keys(weights: np.ndarray,
                  rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """Draws random keys whose largest values sample in proportion to
    `weights` without replacement.

    The primary key of a point of weight `w > 0` is `log(u) / w` with `u`
    uniform in `(0, 1]`. Points of zero weight get `-inf` and therefore rank
    last. The secondary key is another uniform that breaks ties, so points
    of zero weight are picked uniformly once every weighted point is taken.

    Returns:
        The primary and the secondary keys.
    """

    weights = np.asarray(weights, dtype=np.float64)
    u = 1.0 - rng.random(len(weights))
    secondary = rng.random(len(weights))

    primary = np.full(len(weights), -np.inf)
    positive = weights > 0
    primary[positive] = np.log(u[positive]) / weights[positive]
    return primary, secondary


def top_keys(primary: np.ndarray,
             secondary: np.ndarray,
             count: int) -> np.ndarray:
    """Returns the positions of the `count` largest keys, largest first.

    Keys compare by the primary key and then by the secondary one.

    Examples:
        >>> top_keys(np.array([-1.0, -0.5, -np.inf]),
        ...          np.array([0.1, 0.2, 0.3]), 2).tolist()
        [1, 0]
    """

    order = np.lexsort((-np.asarray(secondary), -np.asarray(primary)))
    return order[:max(count, 0)]


@dataclass
class SeedingReport:
    """What a machine tells the coordinator in a selection round.

    Attributes:
        phi: The cost of the machine's candidates with the current centers.
        primary: The primary keys of the machine's best candidates.
        secondary: Their secondary keys.
    """

    phi: float
    primary: np.ndarray
    secondary: np.ndarray

    @property
    def scalars(self) -> int:
        return 1 + len(self.primary) + len(self.secondary)


@machine_step
def machine_seeding_pass(machine: MachineState,
                         centers: CenterSet,
                         l: int) -> SeedingReport:
    """Keys the machine's unselected points and reports its best `l`.

    The positions of the reported points are remembered for
    `machine_send_selected`.
    """

    if len(machine.shard) == 0:
        machine.memory['order'] = np.empty(0, dtype=np.int64)
        return SeedingReport(0.0, np.empty(0), np.empty(0))

    dists = sq_dists_to_set(machine.shard, centers)
    machine.charge(len(machine.shard) * len(centers))

    primary, secondary = weighted_keys(dists, machine.rng)
    order = top_keys(primary, secondary, l)
    machine.memory['order'] = order

    return SeedingReport(float(np.sum(dists)), primary[order],
                         secondary[order])


@machine_step
def machine_send_selected(machine: MachineState,
                          counts: Mapping[int, int]) -> Dataset:
    """Sends the machine's share of the selected points.

    The sent points leave the candidate pool, so no point is selected twice.
    """

    order = machine.memory.pop('order')[:counts.get(machine.id, 0)]

    keep = np.ones(len(machine.shard), dtype=bool)
    keep[order] = False
    return machine.retain(keep)


def select_global(reports: Mapping[int, SeedingReport], l: int) -> Dict[int, int]:
    """Keeps the `l` best keys over all machines.

    Every machine reports its keys best first, so the global selection takes
    a prefix of each machine's report.

    Returns:
        The number of selected points per machine id.
    """

    ids = sorted(reports)
    owners = np.concatenate([np.full(len(reports[j].primary), j, dtype=np.int64)
                             for j in ids])
    primary = np.concatenate([reports[j].primary for j in ids])
    secondary = np.concatenate([reports[j].secondary for j in ids])

    chosen = owners[top_keys(primary, secondary, l)]
    return {j: int(np.sum(chosen == j)) for j in ids}


def choose_machine(sizes: Sequence[int], rng: np.random.Generator) -> int:
    """Picks a machine with probability proportional to its live points."""

    sizes = np.asarray(sizes, dtype=np.float64)
    return int(rng.choice(len(sizes), p=sizes / sizes.sum()))


@machine_step
def machine_send_initial(machine: MachineState, chosen: int) -> Dataset:
    """Sends one uniformly random point if the machine was chosen."""

    if machine.id != chosen or len(machine.shard) == 0:
        return Dataset.empty(machine.shard.dim)

    keep = np.ones(len(machine.shard), dtype=bool)
    keep[machine.rng.integers(len(machine.shard))] = False
    return machine.retain(keep)
