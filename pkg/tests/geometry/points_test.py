import numpy as np
import pytest

from distkm.geometry import Dataset, CenterSet, point, \
    DimensionMismatchError, EmptyCenterSetError, NonFiniteCoordinateError


def test_point_raising_error():
    """Test that `point` rejects non-finite coordinates."""

    with pytest.raises(NonFiniteCoordinateError):
        point([0.0, float('nan')])
    with pytest.raises(NonFiniteCoordinateError):
        point([float('inf')])


def test_dataset_attributes():
    """Test that a `Dataset` keeps its points, dimension and indices."""

    data = Dataset([[0, 0], [1, 0], [1, 0]])

    assert len(data) == 3
    assert data.dim == 2
    assert data.indices.tolist() == [0, 1, 2]


def test_dataset_take_keeps_global_indices():
    """Test that `Dataset.take` keeps the indices of the selected points."""

    data = Dataset([[0], [1], [2], [3]], indices=[10, 11, 12, 13])
    part = data.take([3, 1])

    assert part.indices.tolist() == [13, 11]
    assert part.points.ravel().tolist() == [3.0, 1.0]
    assert part.take([1]).indices.tolist() == [11]


def test_dataset_is_read_only():
    """Test that the points of a `Dataset` cannot be modified in place."""

    data = Dataset([[0, 0]])

    with pytest.raises(ValueError):
        data.points[0, 0] = 1.0


def test_dataset_raising_error():
    """Test that `Dataset` validates its input."""

    with pytest.raises(NonFiniteCoordinateError):
        Dataset([[0, 0], [np.inf, 0]])
    with pytest.raises(DimensionMismatchError):
        Dataset([[0, 0]], dim=3)
    with pytest.raises(ValueError, match='indices'):
        Dataset([[0, 0]], indices=[0, 1])
    with pytest.raises(ValueError, match='dimension'):
        Dataset([])


def test_dataset_concat():
    """Test that `Dataset.concat` preserves order and indices."""

    a = Dataset([[0, 0]], indices=[5])
    b = Dataset([[1, 1], [2, 2]], indices=[1, 9])
    joined = Dataset.concat([a, b], dim=2)

    assert joined.indices.tolist() == [5, 1, 9]
    assert len(Dataset.concat([], dim=2)) == 0

    with pytest.raises(DimensionMismatchError):
        Dataset.concat([a, Dataset([[1]])], dim=2)


def test_center_set_union_and_emptiness():
    """Test `CenterSet.union` and `CenterSet.require_non_empty`."""

    centers = CenterSet([[0, 0]]).union(CenterSet([[1, 1], [2, 2]]))

    assert len(centers) == 3
    assert centers.require_non_empty() is centers

    with pytest.raises(EmptyCenterSetError):
        CenterSet.empty(2).require_non_empty()
    with pytest.raises(DimensionMismatchError):
        centers.union(CenterSet([[1]]))
