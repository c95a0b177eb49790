"""Quadrature rules: Gauss-Legendre and composite Simpson.

Gauss-Legendre handles the smooth scattering and flux integrals; composite
Simpson (the Newton-Cotes member used here) handles the residual-norm grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .legendre import legendre_and_derivative

_NEWTON_TOL = 1e-14
_NEWTON_MAX_ITER = 100


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and positive weights for integration over ``interval``."""

    nodes: np.ndarray
    weights: np.ndarray
    interval: tuple

    def __post_init__(self):
        nodes = np.atleast_1d(np.array(self.nodes, dtype=float))
        weights = np.atleast_1d(np.array(self.weights, dtype=float))
        a, b = (float(v) for v in self.interval)
        if nodes.shape != weights.shape or nodes.ndim != 1 or nodes.size == 0:
            raise ValueError("nodes and weights must be equal-length non-empty 1-d arrays")
        if np.any(weights <= 0.0):
            raise ValueError("quadrature weights must be positive")
        if np.any(nodes < a - 1e-12) or np.any(nodes > b + 1e-12):
            raise ValueError(f"quadrature nodes fall outside [{a}, {b}]")
        if abs(weights.sum() - (b - a)) > 1e-12 * max(1.0, abs(b - a)):
            raise ValueError("quadrature weights must sum to the interval length")
        nodes.flags.writeable = False
        weights.flags.writeable = False
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "interval", (a, b))

    def __len__(self):
        return self.nodes.size


def _gauss_legendre_reference(q):
    """Nodes/weights of the q-point rule on [-1, 1] by Newton iteration.

    Roots of P_q are polished from the Chebyshev-like initial guess
    cos(pi (k - 1/4) / (q + 1/2)); only the non-negative half is computed
    and the rule is mirrored so symmetry holds to the last bit.
    """
    if q == 1:
        return np.array([0.0]), np.array([2.0])
    k = np.arange(1, q // 2 + 1, dtype=float)
    x = np.cos(np.pi * (k - 0.25) / (q + 0.5))
    for _ in range(_NEWTON_MAX_ITER):
        p, dp = legendre_and_derivative(q, x)
        step = p / dp
        x = x - step
        if np.all(np.abs(step) <= _NEWTON_TOL):
            break
    _, dp = legendre_and_derivative(q, x)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    if q % 2:
        _, dp0 = legendre_and_derivative(q, np.array([0.0]))
        nodes = np.concatenate([-x, [0.0], x[::-1]])
        weights = np.concatenate([w, 2.0 / (dp0 * dp0), w[::-1]])
    else:
        nodes = np.concatenate([-x, x[::-1]])
        weights = np.concatenate([w, w[::-1]])
    return nodes, weights


def gauss_legendre(q, a=-1.0, b=1.0):
    """q-point Gauss-Legendre rule on [a, b]; exact through degree 2q - 1."""
    q = int(q)
    if q < 1:
        raise ValueError(f"point count must be >= 1, got {q}")
    a, b = float(a), float(b)
    if a >= b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    nodes, weights = _gauss_legendre_reference(q)
    half = 0.5 * (b - a)
    return QuadratureRule(0.5 * (a + b) + half * nodes, half * weights, (a, b))


def composite_simpson(intervals, a, b):
    """Composite Simpson rule on ``intervals`` uniform cells of [a, b].

    ``intervals`` must be even; the rule uses intervals + 1 equispaced points
    with the 1, 4, 2, ..., 2, 4, 1 weight pattern scaled by h / 3.
    """
    intervals = int(intervals)
    if intervals < 2 or intervals % 2 != 0:
        raise ValueError(f"interval count must be even and >= 2, got {intervals}")
    a, b = float(a), float(b)
    if a >= b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    h = (b - a) / intervals
    nodes = a + h * np.arange(intervals + 1)
    weights = np.full(intervals + 1, 2.0)
    weights[1::2] = 4.0
    weights[0] = weights[-1] = 1.0
    weights *= h / 3.0
    return QuadratureRule(nodes, weights, (a, b))


def integrate(rule, f):
    """Apply ``rule`` to the scalar function ``f``."""
    values = np.fromiter((float(f(t)) for t in rule.nodes), dtype=float, count=len(rule))
    return float(np.dot(rule.weights, values))
