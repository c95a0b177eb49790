"""Legendre polynomials of the first kind and the phase scattering expansion.

Everything is built on the forward three-term recurrence

    P_0(x) = 1,  P_1(x) = x,
    P_{n+1}(x) = ((2n+1) x P_n(x) - n P_{n-1}(x)) / (n+1),

which is numerically stable on [-1, 1].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def legendre_table(max_order, x):
    """Evaluate P_0 .. P_max_order at ``x`` by forward recurrence.

    Parameters
    ----------
    max_order : int
        Highest polynomial order, >= 0.
    x : array_like
        Evaluation points in [-1, 1].

    Returns
    -------
    ndarray of shape (max_order + 1,) + x.shape.
    """
    if max_order < 0:
        raise ValueError(f"order must be >= 0, got {max_order}")
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0):
        raise ValueError("Legendre argument outside [-1, 1]")
    table = np.empty((max_order + 1,) + x.shape, dtype=float)
    table[0] = 1.0
    if max_order >= 1:
        table[1] = x
    for k in range(1, max_order):
        table[k + 1] = ((2 * k + 1) * x * table[k] - k * table[k - 1]) / (k + 1)
    return table


def legendre(order, x):
    """P_order(x) for x in [-1, 1]; scalar in, scalar out."""
    table = legendre_table(order, np.asarray(x, dtype=float))
    out = table[order]
    return out if out.ndim else float(out)


def legendre_and_derivative(order, x):
    """Return (P_order(x), P_order'(x)) for interior points |x| < 1.

    The derivative uses (x^2 - 1) P_n'(x) = n (x P_n(x) - P_{n-1}(x)),
    which is singular at x = +-1; callers (Gauss-Legendre root finding)
    only evaluate strictly inside the interval.
    """
    if order < 1:
        raise ValueError("derivative recurrence needs order >= 1")
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(1, order):
        p, p_prev = ((2 * k + 1) * x * p - k * p_prev) / (k + 1), p
    dp = order * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


@dataclass(frozen=True)
class PhaseExpansion:
    """Phase scattering function as a Legendre product expansion.

    P(x, xhat) = sum_i coeffs[i] * P_i(x) * P_i(xhat), with coeffs[0] == 1
    (normalization of the zeroth moment).  coeffs == (1,) is isotropic
    scattering.
    """

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(float(v) for v in np.atleast_1d(np.asarray(self.coeffs, dtype=float)))
        if len(coeffs) == 0:
            raise ValueError("phase expansion needs at least the zeroth coefficient")
        if coeffs[0] != 1.0:
            raise ValueError(f"zeroth phase coefficient must be 1, got {coeffs[0]}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self):
        """Highest Legendre order in the expansion."""
        return len(self.coeffs) - 1

    def __call__(self, x, xhat):
        """Evaluate the expansion; broadcasts over array arguments."""
        px = legendre_table(self.order, np.asarray(x, dtype=float))
        pxhat = legendre_table(self.order, np.asarray(xhat, dtype=float))
        out = np.asarray(sum(ci * pi * qi for ci, pi, qi in zip(self.coeffs, px, pxhat)))
        return out if out.ndim else float(out)
