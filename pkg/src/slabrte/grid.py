"""Tensor node grid and its partition into collocation equation sets.

The slab domain is [0, 1] in depth y by [-1, 1] in direction cosine x.
Centers sit on the uniform tensor grid y_i = i/m, x_j = (2j - n)/n and
each node carries exactly one equation:

* inflow halves of the two faces get Dirichlet rows (the known boundary
  intensities), since radiation enters at y = 0 moving downward (x > 0)
  and at y = 1 moving upward (x < 0);
* every other node, including the outflow face halves and the x = +-1
  edges, gets a transport-residual row.

Nodes are ordered row-major in (i, j), k = i (n + 1) + j, so the
coefficient indexing is reproducible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class NodeClass(enum.IntEnum):
    """Which equation a collocation node carries."""

    EXIT_BOTTOM = 0    # y = 1, x >= 0: residual row on the outflow half of the bottom face
    EXIT_TOP = 1       # y = 0, x <= 0: residual row on the outflow half of the top face
    EDGE_XMIN = 2      # x = -1, 0 < y < 1: residual row
    EDGE_XMAX = 3      # x = +1, 0 < y < 1: residual row
    INTERIOR = 4       # residual row
    INFLOW_TOP = 5     # y = 0, x > 0: Dirichlet row, intensity entering at the top
    INFLOW_BOTTOM = 6  # y = 1, x < 0: Dirichlet row, intensity entering at the bottom


RESIDUAL_CLASSES = (
    NodeClass.EXIT_BOTTOM,
    NodeClass.EXIT_TOP,
    NodeClass.EDGE_XMIN,
    NodeClass.EDGE_XMAX,
    NodeClass.INTERIOR,
)
DIRICHLET_CLASSES = (NodeClass.INFLOW_TOP, NodeClass.INFLOW_BOTTOM)

X_GRID_MODES = ("full", "half")


@dataclass(frozen=True)
class NodePartition:
    """Centers, collocation points and the class of each node.

    ``nodes`` are the basis centers; ``collocation`` are the points where
    equations are enforced.  In the default ``x_grid="full"`` mode the two
    coincide.  In the ``"half"`` comparison mode centers span only
    x in [-1/2, 1/2] while the x = +-1 edge rows still collocate at +-1.
    """

    m: int
    n: int
    nodes: np.ndarray
    collocation: np.ndarray
    classes: np.ndarray

    @property
    def n_nodes(self):
        return self.nodes.shape[0]

    def indices_of(self, node_class):
        """Indices of all nodes with the given class, in grid order."""
        return np.flatnonzero(self.classes == int(node_class))

    def class_counts(self):
        """Mapping NodeClass -> number of nodes of that class."""
        return {cls: int(np.sum(self.classes == int(cls))) for cls in NodeClass}

    @property
    def residual_mask(self):
        """Boolean mask of rows that enforce the transport residual."""
        return self.classes < int(NodeClass.INFLOW_TOP)

    @property
    def dirichlet_mask(self):
        return ~self.residual_mask


def _classify(i, j, m, n):
    if i == 0:
        return NodeClass.EXIT_TOP if j <= n // 2 else NodeClass.INFLOW_TOP
    if i == m:
        return NodeClass.EXIT_BOTTOM if j >= n // 2 else NodeClass.INFLOW_BOTTOM
    if j == 0:
        return NodeClass.EDGE_XMIN
    if j == n:
        return NodeClass.EDGE_XMAX
    return NodeClass.INTERIOR


def build_partition(m, n, x_grid="full"):
    """Build the (m + 1)(n + 1)-node grid and classify every node.

    Parameters
    ----------
    m : int
        Number of uniform divisions in depth y; must be >= 2.
    n : int
        Number of uniform divisions in direction cosine x; must be even
        and >= 2 so the grid has an x = 0 column and non-empty edges.
    x_grid : str
        ``"full"`` places centers on [-1, 1] (the default, which makes
        collocation points identical to centers); ``"half"`` places them
        on [-1/2, 1/2] with x = +-1 edge rows collocated off the centers,
        kept for comparison with the narrow-grid variant.
    """
    m = int(m)
    n = int(n)
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if n < 2 or n % 2 != 0:
        raise ValueError(f"n must be even and >= 2, got {n}")
    if x_grid not in X_GRID_MODES:
        raise ValueError(f"x_grid must be one of {X_GRID_MODES}, got {x_grid!r}")

    i = np.arange(m + 1)
    j = np.arange(n + 1)
    y = i / m
    x = (2.0 * j - n) / (n if x_grid == "full" else 2 * n)

    yy, xx = np.meshgrid(y, x, indexing="ij")
    nodes = np.column_stack([yy.ravel(), xx.ravel()])
    classes = np.array(
        [int(_classify(ii, jj, m, n)) for ii in i for jj in j], dtype=np.int8
    )

    collocation = nodes.copy()
    if x_grid == "half":
        collocation[classes == int(NodeClass.EDGE_XMIN), 1] = -1.0
        collocation[classes == int(NodeClass.EDGE_XMAX), 1] = 1.0

    nodes.flags.writeable = False
    collocation.flags.writeable = False
    classes.flags.writeable = False
    return NodePartition(m=m, n=n, nodes=nodes, collocation=collocation, classes=classes)
