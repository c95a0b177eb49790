import numpy as np
import pytest

from slabrte import NodeClass, build_partition
from slabrte.grid import DIRICHLET_CLASSES, RESIDUAL_CLASSES


def expected_counts(m, n):
    return {
        NodeClass.EXIT_BOTTOM: n // 2 + 1,
        NodeClass.EXIT_TOP: n // 2 + 1,
        NodeClass.EDGE_XMIN: m - 1,
        NodeClass.EDGE_XMAX: m - 1,
        NodeClass.INTERIOR: (m - 1) * (n - 1),
        NodeClass.INFLOW_TOP: n // 2,
        NodeClass.INFLOW_BOTTOM: n // 2,
    }


def test_smallest_grid():
    part = build_partition(2, 2)
    assert part.n_nodes == 9
    assert part.class_counts() == {
        NodeClass.EXIT_BOTTOM: 2,
        NodeClass.EXIT_TOP: 2,
        NodeClass.EDGE_XMIN: 1,
        NodeClass.EDGE_XMAX: 1,
        NodeClass.INTERIOR: 1,
        NodeClass.INFLOW_TOP: 1,
        NodeClass.INFLOW_BOTTOM: 1,
    }


def test_four_by_four_counts():
    part = build_partition(4, 4)
    counts = part.class_counts()
    assert list(counts.values()) == [3, 3, 3, 3, 9, 2, 2]
    assert sum(counts.values()) == 25


def test_benchmark_grid_size():
    assert build_partition(20, 20).n_nodes == 441


@pytest.mark.parametrize("m", range(2, 25, 2))
@pytest.mark.parametrize("n", range(2, 25, 2))
def test_partition_property(m, n):
    part = build_partition(m, n)
    counts = part.class_counts()
    assert counts == expected_counts(m, n)
    # every node carries exactly one class and the classes cover the grid
    assert sum(counts.values()) == (m + 1) * (n + 1) == part.n_nodes
    assert part.residual_mask.sum() + part.dirichlet_mask.sum() == part.n_nodes


def test_corner_assignments():
    part = build_partition(6, 8)
    lookup = {tuple(node): NodeClass(cls) for node, cls in zip(part.nodes, part.classes)}
    assert lookup[(0.0, -1.0)] == NodeClass.EXIT_TOP
    assert lookup[(1.0, 1.0)] == NodeClass.EXIT_BOTTOM
    assert lookup[(0.0, 1.0)] == NodeClass.INFLOW_TOP
    assert lookup[(1.0, -1.0)] == NodeClass.INFLOW_BOTTOM


def test_grid_coordinates_and_ordering():
    m, n = 4, 6
    part = build_partition(m, n)
    for i in range(m + 1):
        for j in range(n + 1):
            k = i * (n + 1) + j
            assert part.nodes[k, 0] == pytest.approx(i / m, abs=1e-15)
            assert part.nodes[k, 1] == pytest.approx((2 * j - n) / n, abs=1e-15)
    assert part.nodes[:, 1].min() == -1.0
    assert part.nodes[:, 1].max() == 1.0


def test_dirichlet_nodes_have_signed_direction():
    part = build_partition(8, 10)
    top = part.nodes[part.indices_of(NodeClass.INFLOW_TOP)]
    bottom = part.nodes[part.indices_of(NodeClass.INFLOW_BOTTOM)]
    assert np.all(top[:, 0] == 0.0) and np.all(top[:, 1] > 0.0)
    assert np.all(bottom[:, 0] == 1.0) and np.all(bottom[:, 1] < 0.0)


def test_class_groups_are_complete():
    assert set(RESIDUAL_CLASSES) | set(DIRICHLET_CLASSES) == set(NodeClass)


def test_collocation_equals_centers_by_default():
    part = build_partition(6, 6)
    np.testing.assert_array_equal(part.nodes, part.collocation)


def test_half_grid_variant():
    part = build_partition(4, 4, x_grid="half")
    assert part.nodes[:, 1].min() == -0.5
    assert part.nodes[:, 1].max() == 0.5
    # edge rows still collocate at the domain boundary
    xmin = part.indices_of(NodeClass.EDGE_XMIN)
    xmax = part.indices_of(NodeClass.EDGE_XMAX)
    assert np.all(part.collocation[xmin, 1] == -1.0)
    assert np.all(part.collocation[xmax, 1] == 1.0)
    assert part.class_counts() == expected_counts(4, 4)


def test_rejects_bad_sizes():
    with pytest.raises(ValueError, match="even"):
        build_partition(4, 5)
    with pytest.raises(ValueError):
        build_partition(1, 4)
    with pytest.raises(ValueError):
        build_partition(4, 0)
    with pytest.raises(ValueError, match="x_grid"):
        build_partition(4, 4, x_grid="other")
