"""Skew Hadamard and skew conference matrices, their ETF conversions,
and the doubling constructions.

A skew Hadamard matrix H of order m has +-1 entries, satisfies
H @ H.T == m * I exactly, and H - I is skew-symmetric.  Equivalently
C = H - I is a skew conference matrix.  Square ETF Gram matrices in
symplectic dimension d are exactly the positive multiples of order-d
skew conference matrices; cores of normalized conference matrices give
the d-by-(d+1) family.  All structural checks here are exact integer
arithmetic; floating point appears only when scaling Gram matrices by
their common modulus, and every rounded result is re-verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import (
    FlatKernelError,
    NotEtfError,
    NotSkewConferenceError,
    NotSkewHadamardError,
    RoundingError,
)
from .frames import certify_etf, gram, omega
from .skewlinalg import DEFAULT_TOL, ToleranceProfile, as_matrix
from .tournaments import check_seidel, flat_kernel, seidel_from_gram

__all__ = [
    "is_skew_hadamard",
    "is_skew_conference",
    "normalize_conference",
    "core",
    "etf_to_hadamard_square",
    "hadamard_to_etf_square",
    "hadamard_to_etf_core",
    "etf_core_to_hadamard",
    "double_hadamard",
    "DoublingCoefficients",
    "doubling_coefficients",
    "default_b_matrix",
    "double_frame",
    "seed_hadamard",
]


def _as_int_square(h) -> np.ndarray:
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1] or h.size == 0:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    hi = np.rint(h).astype(np.int64)
    if not np.array_equal(hi, h):
        raise ValueError("entries are not integers")
    return hi


def is_skew_hadamard(h) -> bool:
    h = _as_int_square(h)
    m = h.shape[0]
    if np.any(np.abs(h) != 1):
        return False
    if not np.array_equal(h @ h.T, m * np.eye(m, dtype=np.int64)):
        return False
    c = h - np.eye(m, dtype=np.int64)
    return np.array_equal(c, -c.T)


def is_skew_conference(c) -> bool:
    c = _as_int_square(c)
    m = c.shape[0]
    if np.any(np.diag(c) != 0):
        return False
    off = ~np.eye(m, dtype=bool)
    if m > 1 and not np.all(np.abs(c[off]) == 1):
        return False
    if not np.array_equal(c, -c.T):
        return False
    return np.array_equal(c @ c.T, (m - 1) * np.eye(m, dtype=np.int64))


def normalize_conference(c) -> tuple[np.ndarray, np.ndarray]:
    """Switch a skew conference matrix so its first row becomes (0, 1, ..., 1).

    Returns the normalized matrix and the +-1 diagonal used, whose first
    entry is +1.  Normalizing twice is the identity.
    """
    c = _as_int_square(c)
    if c.shape[0] < 2:
        raise ValueError("normalization needs order at least 2")
    if not is_skew_conference(c):
        raise NotSkewConferenceError("input is not a skew conference matrix")
    eps = c[0].copy()
    eps[0] = 1
    normalized = c * np.outer(eps, eps)
    return normalized, eps


def core(c) -> np.ndarray:
    """Lower-right block of a normalized skew conference matrix."""
    c = _as_int_square(c)
    m = c.shape[0]
    if m < 2:
        raise ValueError("core needs order at least 2")
    if not is_skew_conference(c):
        raise NotSkewConferenceError("input is not a skew conference matrix")
    expected = np.ones(m, dtype=np.int64)
    expected[0] = 0
    if not np.array_equal(c[0], expected):
        raise NotSkewConferenceError("conference matrix is not normalized")
    return c[1:, 1:].copy()


def etf_to_hadamard_square(g, tol: ToleranceProfile = DEFAULT_TOL) -> np.ndarray:
    """I + g/mu for a certified d-by-d ETF Gram matrix g."""
    g = as_matrix(g)
    d = g.shape[0]
    cert = certify_etf(g, d, tol)
    if cert is None or cert.n != d:
        raise NotEtfError("input is not the Gram matrix of a square ETF")
    scaled = g / cert.mu
    h = np.rint(scaled).astype(np.int64) + np.eye(d, dtype=np.int64)
    if np.max(np.abs(scaled - (h - np.eye(d, dtype=np.int64)))) > tol.entry_tol:
        raise RoundingError("scaled Gram entries do not round to +-1")
    if not is_skew_hadamard(h):
        raise RoundingError("rounded matrix failed the exact skew Hadamard check")
    return h


def hadamard_to_etf_square(h) -> np.ndarray:
    """H - I, the Gram matrix of an order-d square ETF."""
    h = _as_int_square(h)
    if not is_skew_hadamard(h):
        raise NotSkewHadamardError("input is not a skew Hadamard matrix")
    return (h - np.eye(h.shape[0], dtype=np.int64)).astype(float)


def hadamard_to_etf_core(h) -> np.ndarray:
    """Core of the normalized conference matrix of H, an (m-2)x(m-1) ETF Gram."""
    h = _as_int_square(h)
    if not is_skew_hadamard(h):
        raise NotSkewHadamardError("input is not a skew Hadamard matrix")
    m = h.shape[0]
    if m < 4:
        raise ValueError(f"core extraction needs order >= 4, got {m}")
    c = h - np.eye(m, dtype=np.int64)
    normalized, _ = normalize_conference(c)
    return core(normalized).astype(float)


def etf_core_to_hadamard(g, tol: ToleranceProfile = DEFAULT_TOL) -> np.ndarray:
    """Rebuild a skew Hadamard matrix of order d+2 from a d-by-(d+1) ETF Gram.

    The scaled Gram is the Seidel matrix of a tournament whose kernel is
    spanned by a flat vector x; bordering with x gives the conference
    matrix and adding I the Hadamard matrix.
    """
    g = as_matrix(g)
    n = g.shape[0]
    cert = certify_etf(g, n - 1, tol)
    if cert is None or cert.n != n:
        raise NotEtfError("input is not the Gram matrix of a d-by-(d+1) ETF")
    s = seidel_from_gram(g, tol)
    x = flat_kernel(s, tol)
    if x is None:
        raise FlatKernelError("numerical kernel extraction failed on a certified core")
    m = n + 1
    c = np.zeros((m, m), dtype=np.int64)
    c[0, 1:] = x
    c[1:, 0] = -x
    c[1:, 1:] = s
    h = c + np.eye(m, dtype=np.int64)
    if not is_skew_hadamard(h):
        raise FlatKernelError("bordered matrix failed the exact skew Hadamard check")
    return h


def double_hadamard(h) -> np.ndarray:
    """Order-2m skew Hadamard matrix [[H, H], [H - 2I, -H + 2I]]."""
    h = _as_int_square(h)
    if not is_skew_hadamard(h):
        raise NotSkewHadamardError("input is not a skew Hadamard matrix")
    m = h.shape[0]
    eye2 = 2 * np.eye(m, dtype=np.int64)
    doubled = np.block([[h, h], [h - eye2, -h + eye2]])
    if not is_skew_hadamard(doubled):
        raise NotSkewHadamardError("doubling failed the exact verification")
    return doubled


@dataclass(frozen=True)
class DoublingCoefficients:
    """Scalars of the frame-level doubling; they satisfy exactly
    a^2 (d-1) - y^2 = 1,  a b = 1/(d-1),  y z = -1,  b^2 - z^2 = -1.
    """

    a: float
    b: float
    y: float
    z: float
    d: int


def doubling_coefficients(d: int) -> DoublingCoefficients:
    if d < 2:
        raise ValueError(f"doubling needs dimension >= 2, got {d}")
    m = d - 1
    a = sqrt((sqrt(4.0 * m * m + 1.0) + 2.0 * d - 3.0) / (2.0 * m * m))
    b = 1.0 / (a * m)
    root = sqrt(a * a * m * m + 1.0)
    y = -a * m / root
    z = root / (a * m)
    coeffs = DoublingCoefficients(a=a, b=b, y=y, z=z, d=d)
    checks = (
        abs(a * a * m - y * y - 1.0),
        abs(a * b - 1.0 / m),
        abs(y * z + 1.0),
        abs(b * b - z * z + 1.0),
    )
    if max(checks) > 1e-12:
        raise ArithmeticError(f"doubling coefficient identities violated: {checks}")
    return coeffs


def default_b_matrix(d: int) -> np.ndarray:
    """Direct sum of d/2 copies of diag(1, -1); satisfies B.T @ omega @ B == -omega."""
    if d < 2 or d % 2 != 0:
        raise ValueError(f"need an even dimension >= 2, got {d}")
    b = np.ones(d)
    b[1::2] = -1.0
    return np.diag(b)


def double_frame(phi, b=None, tol: ToleranceProfile = DEFAULT_TOL) -> np.ndarray:
    """Double a d-by-d ETF synthesis matrix into a 2d-by-2d one.

    With mu the common Gram modulus, G the Gram, and (a, b_c, y, z) the
    doubling coefficients, the doubled frame

        F = [[a/mu * phi @ G, b_c * phi], [y * B @ phi, z * B @ phi]]

    has Gram [[G, G + mu*I], [G - mu*I, -G]] and certifies as a 2d ETF.
    """
    phi = as_matrix(phi)
    d = phi.shape[0]
    g = gram(phi)
    cert = certify_etf(g, d, tol)
    if cert is None or cert.n != d:
        raise NotEtfError("input is not the synthesis matrix of a square ETF")
    if b is None:
        b = default_b_matrix(d)
    else:
        b = as_matrix(b)
        w = omega(d)
        if np.max(np.abs(b.T @ w @ b + w)) > tol.entry_tol:
            raise ValueError("B must satisfy B.T @ omega @ B == -omega")
    cf = doubling_coefficients(d)
    top = np.hstack([(cf.a / cert.mu) * (phi @ g), cf.b * phi])
    bottom = np.hstack([cf.y * (b @ phi), cf.z * (b @ phi)])
    return np.vstack([top, bottom])


def seed_hadamard(order: int) -> np.ndarray:
    """Skew Hadamard matrix of any power-of-two order, built by doubling.

    Other orders are reachable only through search, not through this
    generator.
    """
    if order < 1 or order & (order - 1) != 0:
        raise ValueError(f"seed orders are powers of two, got {order}")
    if order == 1:
        return np.array([[1]], dtype=np.int64)
    h = np.array([[1, 1], [-1, 1]], dtype=np.int64)
    while h.shape[0] < order:
        h = double_hadamard(h)
    return h
