"""Frame potentials of order p, their lower bounds, and gradients.

The order-p potential of a skew Gram matrix g is sum |g_ij|^(2p) for
finite p and max_{i != j} |g_ij| for p = inf (pass ``math.inf``).  The
stated lower bounds assume the Gram is scaled to nuclear norm
sqrt(d*n*(n-1)); ``normalize_nuclear`` performs that scaling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .frames import gram, omega
from .skewlinalg import as_matrix, check_skew

__all__ = [
    "frame_potential",
    "potential_bound",
    "normalize_nuclear",
    "potential_gradient",
    "PotentialReport",
    "potential_report",
]


@dataclass(frozen=True)
class PotentialReport:
    p: float
    value: float
    bound: float
    slack: float


def _check_order(p) -> float:
    p = float(p)
    if math.isnan(p) or p < 1.0:
        raise ValueError(f"potential order must satisfy p >= 1, got {p}")
    return p


def frame_potential(g, p) -> float:
    """Order-p potential of a skew Gram matrix (p = math.inf for the sup form)."""
    p = _check_order(p)
    g = check_skew(g)
    if math.isinf(p):
        off = ~np.eye(g.shape[0], dtype=bool)
        return float(np.max(np.abs(g[off]))) if g.shape[0] > 1 else 0.0
    return float(np.sum(np.abs(g) ** (2.0 * p)))


def potential_bound(d: int, n: int, p) -> float:
    """Lower bound of the order-p potential at nuclear norm sqrt(d*n*(n-1))."""
    p = _check_order(p)
    if not (2 <= d <= n):
        raise ValueError(f"need n >= d >= 2, got d={d}, n={n}")
    if math.isinf(p):
        return 1.0
    if p == 1.0:
        return math.sqrt(n * (n - 1) / d)
    return float(n * (n - 1))


def normalize_nuclear(g, d: int, n: int) -> np.ndarray:
    """Rescale g so its nuclear norm equals sqrt(d*n*(n-1))."""
    g = check_skew(g)
    nuc = float(np.sum(np.linalg.svd(g, compute_uv=False)))
    if nuc == 0.0:
        raise ValueError("cannot normalize the zero matrix")
    return g * (math.sqrt(d * n * (n - 1)) / nuc)


def potential_gradient(phi, p) -> np.ndarray:
    """Gradient of phi -> frame_potential(gram(phi), p) for finite p.

    With g = gram(phi) and the skew weight matrix w_ij = 2p g_ij |g_ij|^(2p-2),
    the chain rule through g = phi.T @ omega @ phi gives -2 * omega @ phi @ w.
    """
    p = _check_order(p)
    if math.isinf(p):
        raise ValueError("gradient is defined for finite orders only")
    phi = as_matrix(phi)
    g = gram(phi)
    if p == 1.0:
        w = 2.0 * g
    else:
        w = 2.0 * p * g * np.abs(g) ** (2.0 * p - 2.0)
    return -2.0 * omega(phi.shape[0]) @ phi @ w


def potential_report(g, d: int, n: int, p) -> PotentialReport:
    """Bundle value, bound, and slack for a Gram matrix already normalized."""
    value = frame_potential(g, p)
    bound = potential_bound(d, n, p)
    return PotentialReport(p=float(p), value=value, bound=bound, slack=value - bound)
