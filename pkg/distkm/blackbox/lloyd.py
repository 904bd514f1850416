import logging
from dataclasses import dataclass
from typing import List

import numpy as np
from scipy.spatial.distance import cdist

from distkm.geometry import CenterSet, assign_with_distances
from distkm.blackbox.config import BlackBoxConfig, ClusterMode, WeightedDataset


logger = logging.getLogger(__name__)

# Candidate medoids scored per call to `cdist`.
_MEDOID_BLOCK = 2048


@dataclass
class LloydTrace:
    """The outcome of a Lloyd run.

    Attributes:
        centers: The final centers.
        costs: The weighted cost before the first update and after every
            accepted update; never increasing.
        iterations: The number of updates that were computed.
    """

    centers: CenterSet
    costs: List[float]
    iterations: int

    @property
    def cost(self) -> float:
        return self.costs[-1]


def _centroids(points, weights, labels, centers):
    k, dim = centers.shape
    mass = np.bincount(labels, weights=weights, minlength=k)
    sums = np.column_stack([
        np.bincount(labels, weights=weights * points[:, j], minlength=k)
        for j in range(dim)
    ])

    updated = centers.copy()
    filled = mass > 0
    updated[filled] = sums[filled] / mass[filled, None]
    return updated, filled


def _medoids(points, weights, labels, centers):
    k = len(centers)
    updated = centers.copy()
    filled = np.zeros(k, dtype=bool)

    for j in range(k):
        members = np.flatnonzero(labels == j)
        if len(members) == 0:
            continue

        member_points = points[members]
        member_weights = weights[members]
        scores = np.empty(len(members))
        for start in range(0, len(members), _MEDOID_BLOCK):
            block = member_points[start:start + _MEDOID_BLOCK]
            scores[start:start + _MEDOID_BLOCK] = \
                member_weights @ cdist(member_points, block, 'sqeuclidean')

        updated[j] = member_points[np.argmin(scores)]
        filled[j] = True

    return updated, filled


def _repair(points, weights, dists, updated, filled):
    """Moves centers of empty clusters onto the most expensive points."""

    contribution = weights * dists
    for j in np.flatnonzero(~filled):
        worst = int(np.argmax(contribution))
        updated[j] = points[worst]
        contribution[worst] = 0.0

    return updated


def lloyd_trace(data: WeightedDataset,
                init: CenterSet,
                config: BlackBoxConfig) -> LloydTrace:
    """Runs weighted Lloyd iterations and records the cost after each one.

    Each iteration assigns every point to its nearest center and moves every
    center to the weighted mean of its cluster (centroid mode) or to the
    member point that minimizes the weighted cost of the cluster (medoid
    mode). A center left without points is moved onto the point with the
    largest weighted cost. Iterations stop after `config.max_lloyd_iters`
    updates, or when an update improves the cost by less than
    `config.convergence_tol` times the previous cost. An update that would
    increase the cost is discarded.
    """

    init.require_non_empty()

    points = data.points
    weights = data.weights
    update = _medoids if config.mode is ClusterMode.MEDOID else _centroids

    centers = np.array(init.centers, copy=True)
    labels, dists = assign_with_distances(points, centers)
    costs = [float(np.sum(weights * dists))]

    iterations = 0
    while iterations < config.max_lloyd_iters:
        iterations += 1

        updated, filled = update(points, weights, labels, centers)
        updated = _repair(points, weights, dists, updated, filled)

        new_labels, new_dists = assign_with_distances(points, updated)
        new_cost = float(np.sum(weights * new_dists))
        if new_cost > costs[-1]:
            break

        improvement = costs[-1] - new_cost
        threshold = config.convergence_tol * costs[-1]

        centers, labels, dists = updated, new_labels, new_dists
        costs.append(new_cost)

        if improvement <= threshold:
            break

    logger.debug('Lloyd stopped after %d iterations with cost %.6g.',
                 iterations, costs[-1])

    return LloydTrace(CenterSet(centers, dim=data.dim), costs, iterations)


def lloyd(data: WeightedDataset,
          init: CenterSet,
          config: BlackBoxConfig) -> CenterSet:
    """Runs weighted Lloyd iterations from `init` and returns the centers.

    See `lloyd_trace` for the exact update and stopping rules.

    Examples:
        >>> data = WeightedDataset.unit(Dataset([[0, 0], [2, 0]]))
        >>> lloyd(data, CenterSet([[1, 0]]), BlackBoxConfig()).centers
        array([[1., 0.]])
    """
    return lloyd_trace(data, init, config).centers
