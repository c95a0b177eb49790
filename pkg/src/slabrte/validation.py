"""Input validation helpers shared across the package."""

from __future__ import annotations

import numpy as np

# Slack for floating-point noise when checking domain membership.
DOMAIN_ATOL = 1e-12


def check_positive(name, value):
    """Validate that ``value`` is a positive finite scalar and return it as float."""
    v = float(value)
    if not np.isfinite(v) or v <= 0.0:
        raise ValueError(f"{name} must be positive, got {value!r}")
    return v


def check_even_count(name, value, minimum=2):
    """Validate that ``value`` is an even integer >= ``minimum`` and return it as int."""
    v = int(value)
    if v != value:
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if v < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {v}")
    if v % 2 != 0:
        raise ValueError(f"{name} must be even, got {v}")
    return v


def as_points(X):
    """Coerce ``X`` to a float array of shape (n_points, 2) with columns (y, x)."""
    pts = np.asarray(X, dtype=float)
    if pts.ndim == 1:
        if pts.shape[0] != 2:
            raise ValueError(f"a single point must have two coordinates (y, x), got shape {pts.shape}")
        pts = pts.reshape(1, 2)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError(f"points must have shape (n_points, 2), got {pts.shape}")
    return pts


def check_in_domain(y, x):
    """Validate that all (y, x) lie in the slab domain [0, 1] x [-1, 1]."""
    y = np.asarray(y, dtype=float)
    x = np.asarray(x, dtype=float)
    if np.any(y < -DOMAIN_ATOL) or np.any(y > 1.0 + DOMAIN_ATOL):
        raise ValueError("depth coordinate y outside [0, 1]")
    if np.any(x < -1.0 - DOMAIN_ATOL) or np.any(x > 1.0 + DOMAIN_ATOL):
        raise ValueError("direction cosine x outside [-1, 1]")


def evaluate_on(f, x):
    """Evaluate a scalar function on an array, falling back to pointwise calls.

    Array-aware callables (anything built from numpy operations) are evaluated
    in one shot; plain scalar functions are mapped element by element.
    """
    x = np.asarray(x, dtype=float)
    try:
        out = np.asarray(f(x), dtype=float)
        if out.shape == x.shape:
            return out
    except (TypeError, ValueError):
        pass
    flat = np.fromiter((float(f(v)) for v in x.ravel()), dtype=float, count=x.size)
    return flat.reshape(x.shape)
