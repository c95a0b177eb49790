"""Infinitely smooth radial basis kernels and their depth derivative.

Four classical families are supported, all functions of the Euclidean
distance r = ||X - X_k|| in the (y, x) plane and a shape parameter c > 0:

    mq   sqrt(r^2 + c^2)         multiquadric
    imq  1 / sqrt(r^2 + c^2)     inverse multiquadric
    ga   exp(-c r^2)             Gaussian
    iq   1 / (r^2 + c^2)         inverse quadric

Each family is smooth in r^2, so the y-derivative factors as
d(phi)/dy = (y - y_k) * phi'(r)/r with phi'(r)/r finite at r = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .validation import check_positive

KERNEL_FAMILIES = ("mq", "imq", "ga", "iq")


@dataclass(frozen=True)
class RbfKernel:
    """A radial basis kernel: one of the four smooth families with shape c > 0.

    Parameters
    ----------
    family : str
        One of ``"mq"``, ``"imq"``, ``"ga"``, ``"iq"`` (case-insensitive).
    c : float
        Shape parameter; must be positive.  Small c gives peaked, well
        conditioned bases; large c gives flat, ill conditioned ones.
    """

    family: str
    c: float

    def __post_init__(self):
        fam = str(self.family).lower()
        if fam not in KERNEL_FAMILIES:
            raise ValueError(f"unknown kernel family {self.family!r}; choose from {KERNEL_FAMILIES}")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "c", check_positive("shape parameter c", self.c))

    def eval(self, r):
        """Evaluate phi(r) for r >= 0.  Accepts scalars or arrays."""
        r = np.asarray(r, dtype=float)
        c2 = self.c * self.c
        if self.family == "mq":
            out = np.sqrt(r * r + c2)
        elif self.family == "imq":
            out = 1.0 / np.sqrt(r * r + c2)
        elif self.family == "ga":
            out = np.exp(-self.c * r * r)
        else:  # iq
            out = 1.0 / (r * r + c2)
        return out if out.ndim else float(out)

    def radial_slope(self, r):
        """Return phi'(r)/r, the radial factor of the Cartesian gradient.

        Finite at r = 0 for every family because phi is smooth in r^2:
        d(phi)/dy = (y - y_k) * radial_slope(r).
        """
        r = np.asarray(r, dtype=float)
        c2 = self.c * self.c
        if self.family == "mq":
            out = 1.0 / np.sqrt(r * r + c2)
        elif self.family == "imq":
            out = -((r * r + c2) ** -1.5)
        elif self.family == "ga":
            out = -2.0 * self.c * np.exp(-self.c * r * r)
        else:  # iq
            out = -2.0 / (r * r + c2) ** 2
        return out if out.ndim else float(out)

    def eval_dy(self, point, center):
        """Analytic d/dy of phi(||X - X_k||) at ``point`` for basis ``center``.

        Both arguments are (y, x) pairs or arrays broadcastable to pairs on
        the last axis.
        """
        point = np.asarray(point, dtype=float)
        center = np.asarray(center, dtype=float)
        dy = point[..., 0] - center[..., 0]
        dx = point[..., 1] - center[..., 1]
        r = np.sqrt(dy * dy + dx * dx)
        out = dy * self.radial_slope(r)
        return out if out.ndim else float(out)
