"""Evaluation of the solved intensity field and its derived quantities.

A SolvedField binds the coefficient vector to its kernel, centers and
problem.  From it come the intensity surface, the pointwise transport
residual, the upward flux

    F(y) = 2 Integral_0^1 I(y, x) x dx,

and the squared residual norm over the whole domain, integrated by
composite Simpson in each direction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .assembly import pairwise_distance
from .grid import NodeClass
from .kernels import RbfKernel
from .legendre import legendre_table
from .problems import SlabProblem
from .quadrature import QuadratureRule, composite_simpson, gauss_legendre
from .validation import check_in_domain, evaluate_on

# Cap on scratch matrix size when evaluating on large point sets.
_CHUNK = 4096


@dataclass(frozen=True)
class SolvedField:
    """Intensity approximation sum_k lambda_k phi(||X - X_k||)."""

    coefficients: np.ndarray
    kernel: RbfKernel
    centers: np.ndarray
    problem: SlabProblem

    def __post_init__(self):
        coeff = np.asarray(self.coefficients, dtype=float)
        centers = np.asarray(self.centers, dtype=float)
        if centers.ndim != 2 or centers.shape[1] != 2:
            raise ValueError("centers must have shape (n_centers, 2)")
        if coeff.shape != (centers.shape[0],):
            raise ValueError("coefficient count must match the number of centers")
        object.__setattr__(self, "coefficients", coeff)
        object.__setattr__(self, "centers", centers)

    # -- core evaluations ------------------------------------------------

    def _accumulate(self, points, with_derivative=False):
        """Kernel-sum evaluation at (n, 2) points, chunked to bound memory."""
        out = np.empty(points.shape[0])
        d_out = np.empty(points.shape[0]) if with_derivative else None
        for lo in range(0, points.shape[0], _CHUNK):
            chunk = points[lo : lo + _CHUNK]
            r = pairwise_distance(chunk, self.centers)
            out[lo : lo + _CHUNK] = self.kernel.eval(r) @ self.coefficients
            if with_derivative:
                dy = chunk[:, 0:1] - self.centers[None, :, 0]
                d_out[lo : lo + _CHUNK] = (dy * self.kernel.radial_slope(r)) @ self.coefficients
        return (out, d_out) if with_derivative else out

    def intensity(self, y, x):
        """I(y, x); broadcasts over array arguments, rejects points off the slab."""
        y, x = np.broadcast_arrays(np.asarray(y, dtype=float), np.asarray(x, dtype=float))
        check_in_domain(y, x)
        pts = np.column_stack([y.ravel(), x.ravel()])
        out = self._accumulate(pts).reshape(y.shape)
        return out if out.ndim else float(out)

    def intensity_dy(self, y, x):
        """dI/dy at (y, x)."""
        y, x = np.broadcast_arrays(np.asarray(y, dtype=float), np.asarray(x, dtype=float))
        check_in_domain(y, x)
        pts = np.column_stack([y.ravel(), x.ravel()])
        _, d_out = self._accumulate(pts, with_derivative=True)
        d_out = d_out.reshape(y.shape)
        return d_out if d_out.ndim else float(d_out)

    # -- transport residual ----------------------------------------------

    def _scattering_row(self, y, xs, scatter_rule, row_legendre):
        """(w/2)-free scattering integral at one depth, for all xs at once."""
        xh = scatter_rule.nodes
        pts = np.column_stack([np.full(xh.shape, y), xh])
        intensity_hat = self._accumulate(pts)
        order = self.problem.phase.order
        moments = (legendre_table(order, xh) * scatter_rule.weights) @ intensity_hat
        return moments @ row_legendre

    def residual_grid(self, ys, xs, scatter_rule=None):
        """Transport residual on the tensor grid ys x xs; shape (len(ys), len(xs))."""
        scatter_rule = scatter_rule or gauss_legendre(64, -1.0, 1.0)
        ys = np.atleast_1d(np.asarray(ys, dtype=float))
        xs = np.atleast_1d(np.asarray(xs, dtype=float))
        check_in_domain(ys, xs)
        problem = self.problem
        coeffs = np.asarray(problem.phase.coeffs)
        row_legendre = legendre_table(problem.phase.order, xs) * coeffs[:, None]
        source = evaluate_on(problem.source, ys)
        out = np.empty((ys.size, xs.size))
        for iy, y in enumerate(ys):
            pts = np.column_stack([np.full(xs.shape, y), xs])
            intensity, d_dy = self._accumulate(pts, with_derivative=True)
            scatter = self._scattering_row(y, xs, scatter_rule, row_legendre)
            out[iy] = (
                (xs / problem.optical_depth) * d_dy
                + intensity
                - source[iy]
                - 0.5 * problem.albedo * scatter
            )
        return out

    def residual(self, y, x, scatter_rule=None):
        """Pointwise transport residual; scalar in, scalar out."""
        out = self.residual_grid(
            np.atleast_1d(np.asarray(y, dtype=float)),
            np.atleast_1d(np.asarray(x, dtype=float)),
            scatter_rule,
        )
        if np.ndim(y) == 0 and np.ndim(x) == 0:
            return float(out[0, 0])
        return out

    # -- integrated quantities -------------------------------------------

    def flux(self, y, rule=None):
        """Upward flux F(y) = 2 Integral_0^1 I(y, x) x dx via ``rule``.

        ``y`` may be a scalar or an array of depths.
        """
        rule = rule or gauss_legendre(64, 0.0, 1.0)
        a, b = rule.interval
        if not (abs(a) < 1e-12 and abs(b - 1.0) < 1e-12):
            raise ValueError("flux rule must integrate over [0, 1]")
        ys = np.atleast_1d(np.asarray(y, dtype=float))
        intensity = self.intensity(ys[:, None], rule.nodes[None, :])
        out = 2.0 * intensity @ (rule.weights * rule.nodes)
        return float(out[0]) if np.ndim(y) == 0 else out

    def residual_norm(self, grid_x=200, grid_y=100, scatter_rule=None):
        """Squared residual norm over [-1, 1] x [0, 1].

        Composite Simpson on ``grid_y`` cells in depth and ``grid_x`` cells
        in direction cosine, applied to the squared transport residual.
        """
        rule_x = composite_simpson(grid_x, -1.0, 1.0)
        rule_y = composite_simpson(grid_y, 0.0, 1.0)
        res = self.residual_grid(rule_y.nodes, rule_x.nodes, scatter_rule)
        return float(rule_y.weights @ (res * res) @ rule_x.weights)

    # -- diagnostics -------------------------------------------------------

    def boundary_misfit(self, partition):
        """Largest |I - data| over the Dirichlet (inflow) nodes of ``partition``."""
        worst = 0.0
        for indices, data in (
            (partition.indices_of(NodeClass.INFLOW_TOP), self.problem.inflow_top),
            (partition.indices_of(NodeClass.INFLOW_BOTTOM), self.problem.inflow_bottom),
        ):
            if indices.size == 0:
                continue
            pts = partition.collocation[indices]
            fitted = self.intensity(pts[:, 0], pts[:, 1])
            target = evaluate_on(data, pts[:, 1])
            worst = max(worst, float(np.max(np.abs(fitted - target))))
        return worst
