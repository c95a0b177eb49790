"""Assembly of the dense collocation system.

Each residual row p enforces the transport equation at collocation point
(y_p, x_p): for basis column k centered at (y_k, x_k),

    A[p, k] = (x_p / t) d(phi)/dy + phi(r_pk)
              - (w / 2) sum_i c_i P_i(x_p) Integral P_i(xh) phi(||(y_p, xh) - X_k||) dxh,

with the xh-integral evaluated by the scattering quadrature rule, and
b[p] = S(y_p).  Dirichlet rows fit the inflow boundary data instead:
A[p, k] = phi(r_pk), b[p] = known intensity.

The scattering integral depends on the row only through y_p, so its
(order, column) block is computed once per distinct y value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import NodeClass, NodePartition
from .kernels import RbfKernel
from .legendre import legendre_table
from .problems import SlabProblem
from .quadrature import QuadratureRule
from .validation import evaluate_on


@dataclass(frozen=True)
class LinearSystem:
    """Dense square system with per-row provenance.

    ``row_class`` records which equation set produced each row, matching
    the node classes of the partition the system was assembled from.
    """

    a: np.ndarray
    b: np.ndarray
    row_class: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float)
        b = np.asarray(self.b, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"matrix must be square, got shape {a.shape}")
        if b.shape != (a.shape[0],):
            raise ValueError("right-hand side length must match the matrix dimension")
        row_class = np.asarray(self.row_class)
        if row_class.shape != (a.shape[0],):
            raise ValueError("row_class length must match the matrix dimension")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "row_class", row_class)

    @property
    def size(self):
        return self.a.shape[0]


def pairwise_distance(points, centers):
    """Euclidean distances between (n, 2) points and (m, 2) centers."""
    dy = points[:, 0:1] - centers[None, :, 0]
    dx = points[:, 1:2] - centers[None, :, 1]
    return np.sqrt(dy * dy + dx * dx)


def interpolation_matrix(partition: NodePartition, kernel: RbfKernel):
    """Plain RBF interpolation matrix A[j, k] = phi(||node_j - node_k||).

    Symmetric to the last bit because each (j, k) / (k, j) pair is computed
    from identical squared coordinate differences.
    """
    return kernel.eval(pairwise_distance(partition.nodes, partition.nodes))


def scattering_blocks(y_values, partition, kernel, phase_order, scatter_rule):
    """Per-depth scattering moment blocks.

    For each depth y in ``y_values`` returns the (phase_order + 1, N) block
    T[i, k] = Integral_{-1}^{1} P_i(xh) phi(||(y, xh) - X_k||) dxh evaluated
    with ``scatter_rule``.
    """
    xh = scatter_rule.nodes
    weighted_legendre = legendre_table(phase_order, xh) * scatter_rule.weights
    centers = partition.nodes
    blocks = {}
    for y in y_values:
        dy = y - centers[:, 0]
        dx = xh[:, None] - centers[None, :, 1]
        r = np.sqrt(dy * dy + dx * dx)
        blocks[y] = weighted_legendre @ kernel.eval(r)
    return blocks


def assemble(
    problem: SlabProblem,
    partition: NodePartition,
    kernel: RbfKernel,
    scatter_rule: QuadratureRule,
) -> LinearSystem:
    """Build the dense collocation system for ``problem`` on ``partition``."""
    a_lo, b_hi = scatter_rule.interval
    if not (abs(a_lo + 1.0) < 1e-12 and abs(b_hi - 1.0) < 1e-12):
        raise ValueError("scattering rule must integrate over [-1, 1]")

    pts = partition.collocation
    centers = partition.nodes
    n_nodes = partition.n_nodes
    y_p = pts[:, 0]
    x_p = pts[:, 1]

    r = pairwise_distance(pts, centers)
    phi = kernel.eval(r)
    dphi_dy = (y_p[:, None] - centers[None, :, 0]) * kernel.radial_slope(r)

    # Transport part of every row; Dirichlet rows are overwritten below.
    a = phi + (x_p / problem.optical_depth)[:, None] * dphi_dy

    coeffs = np.asarray(problem.phase.coeffs)
    row_legendre = legendre_table(problem.phase.order, x_p) * coeffs[:, None]
    blocks = scattering_blocks(
        np.unique(y_p), partition, kernel, problem.phase.order, scatter_rule
    )
    residual_rows = np.flatnonzero(partition.residual_mask)
    for p in residual_rows:
        a[p] -= 0.5 * problem.albedo * (row_legendre[:, p] @ blocks[y_p[p]])

    b = np.empty(n_nodes)
    b[residual_rows] = evaluate_on(problem.source, y_p[residual_rows])

    top = partition.indices_of(NodeClass.INFLOW_TOP)
    bottom = partition.indices_of(NodeClass.INFLOW_BOTTOM)
    a[top] = phi[top]
    a[bottom] = phi[bottom]
    b[top] = evaluate_on(problem.inflow_top, x_p[top])
    b[bottom] = evaluate_on(problem.inflow_bottom, x_p[bottom])

    return LinearSystem(a=a, b=b, row_class=partition.classes.copy())
