"""Slab transfer problem instances: physics parameters and boundary data.

The governing integro-differential equation for the intensity I(y, x) is

    (x / t) dI/dy + I = S(y) + (w / 2) Integral_{-1}^{1} P(x, xh) I(y, xh) dxh

on y in [0, 1], x in [-1, 1], with optical depth t, single-scattering
albedo w, emission source S and phase expansion P.  Known intensities
enter at the top face (y = 0, x > 0) and the bottom face (y = 1, x < 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .legendre import PhaseExpansion
from .validation import check_positive


def constant(value):
    """A boundary/source function that is identically ``value``."""
    value = float(value)

    def f(x):
        x = np.asarray(x, dtype=float)
        out = np.full(x.shape, value)
        return out if out.ndim else float(out)

    return f


def polynomial(coeffs):
    """Polynomial function from low-order-first coefficients [a0, a1, ...]."""
    coeffs = [float(v) for v in coeffs]
    if not coeffs:
        coeffs = [0.0]

    def f(x):
        x = np.asarray(x, dtype=float)
        out = np.polynomial.polynomial.polyval(x, coeffs)
        return out if np.ndim(out) else float(out)

    return f


@dataclass(frozen=True)
class SlabProblem:
    """One radiative transfer instance for the slab geometry.

    Parameters
    ----------
    optical_depth : float
        Slab optical thickness t > 0.
    albedo : float
        Single-scattering albedo w in [0, 1].
    phase : PhaseExpansion
        Legendre expansion of the scattering phase function.
    source : callable
        Dimensionless emission S(y) on [0, 1].
    inflow_top : callable
        Intensity entering the top face: I(0, x) for x in (0, 1].
    inflow_bottom : callable
        Intensity entering the bottom face: I(1, x) for x in [-1, 0).
    """

    optical_depth: float
    albedo: float
    phase: PhaseExpansion
    source: Callable = field(default_factory=lambda: constant(0.0))
    inflow_top: Callable = field(default_factory=lambda: constant(1.0))
    inflow_bottom: Callable = field(default_factory=lambda: constant(0.0))

    def __post_init__(self):
        object.__setattr__(self, "optical_depth", check_positive("optical_depth", self.optical_depth))
        albedo = float(self.albedo)
        if not 0.0 <= albedo <= 1.0:
            raise ValueError(f"albedo must lie in [0, 1], got {albedo}")
        object.__setattr__(self, "albedo", albedo)
        if not isinstance(self.phase, PhaseExpansion):
            object.__setattr__(self, "phase", PhaseExpansion(tuple(self.phase)))


def example1(optical_depth, c1):
    """Pure-scattering benchmark: unit albedo, linearly anisotropic phase.

    Unit intensity enters the top face, nothing enters the bottom, there is
    no internal emission, and the phase function is 1 + c1 * x * xhat.
    """
    return SlabProblem(
        optical_depth=optical_depth,
        albedo=1.0,
        phase=PhaseExpansion((1.0, float(c1))),
        source=constant(0.0),
        inflow_top=constant(1.0),
        inflow_bottom=constant(0.0),
    )


def example2():
    """Scattering benchmark with albedo 0.8 and a fourth-order phase expansion."""
    return SlabProblem(
        optical_depth=1.0,
        albedo=0.8,
        phase=PhaseExpansion((1.0, 0.6438, 0.5542, 0.1036, 0.0105)),
        source=constant(0.0),
        inflow_top=constant(1.0),
        inflow_bottom=constant(0.0),
    )
