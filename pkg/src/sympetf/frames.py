"""Frames in real symplectic space.

The ambient space is R^d (d even) carrying the symplectic form
[x, y] = x.T @ omega(d) @ y.  A d-by-n matrix ``phi`` is read as the
synthesis operator of the frame given by its columns; its adjoint with
respect to the symplectic form on the target and the Euclidean form on
the source is ``analysis(phi) = phi.T @ omega(d)``.  The Gram matrix
``analysis(phi) @ phi`` is always real skew-symmetric, so tightness and
equiangularity are decided entirely by skew linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import FactorizationError, NotAFrameError
from .skewlinalg import (
    DEFAULT_TOL,
    ToleranceProfile,
    as_matrix,
    check_skew,
    rank_by_sv,
    skew_spectral_form,
)

__all__ = [
    "omega",
    "analysis",
    "gram",
    "frame_operator",
    "is_frame",
    "FrameBounds",
    "frame_bounds",
    "dual_frame",
    "factor_gram",
    "is_tight",
    "is_equiangular",
    "EtfCertificate",
    "certify_etf",
    "admissible_sizes",
    "symplectic_witness",
]


class FrameBounds(NamedTuple):
    lower: float
    upper: float


@dataclass(frozen=True)
class EtfCertificate:
    """Verified parameters of an equiangular tight frame.

    ``mu`` is the common off-diagonal Gram modulus, ``c`` the tightness
    constant; the residuals record how sharply the defining identities
    held.  For a valid certificate c = mu*sqrt(n-1) when n == d and
    c = mu*sqrt(n) when n == d+1.
    """

    d: int
    n: int
    mu: float
    c: float
    equiangular_residual: float
    tightness_residual: float


def omega(d: int) -> np.ndarray:
    """Standard symplectic form matrix: direct sum of d/2 blocks [[0,1],[-1,0]]."""
    if d < 2 or d % 2 != 0:
        raise ValueError(f"symplectic dimension must be even and >= 2, got {d}")
    w = np.zeros((d, d))
    for i in range(0, d, 2):
        w[i, i + 1] = 1.0
        w[i + 1, i] = -1.0
    return w


def _check_synthesis(phi) -> np.ndarray:
    phi = as_matrix(phi)
    d = phi.shape[0]
    if d < 2 or d % 2 != 0:
        raise ValueError(f"synthesis matrix must have an even number >= 2 of rows, got {d}")
    return phi


def analysis(phi) -> np.ndarray:
    """Adjoint of the synthesis operator: phi.T @ omega."""
    phi = _check_synthesis(phi)
    return phi.T @ omega(phi.shape[0])


def gram(phi) -> np.ndarray:
    """Skew-symmetric Gram matrix analysis(phi) @ phi, antisymmetrized exactly."""
    phi = _check_synthesis(phi)
    g = analysis(phi) @ phi
    return (g - g.T) / 2.0


def frame_operator(phi) -> np.ndarray:
    """The d-by-d operator phi @ analysis(phi)."""
    phi = _check_synthesis(phi)
    return phi @ analysis(phi)


def is_frame(phi, tol: ToleranceProfile = DEFAULT_TOL) -> bool:
    """A synthesis matrix is a frame iff its columns span the whole space."""
    phi = _check_synthesis(phi)
    return rank_by_sv(phi, tol) == phi.shape[0]


def frame_bounds(phi, tol: ToleranceProfile = DEFAULT_TOL) -> FrameBounds:
    """Extremal frame bounds: min and max eigenvalue modulus of the frame operator.

    These equal the extreme nonzero singular values of the Gram matrix, which
    is how they are computed here.
    """
    phi = _check_synthesis(phi)
    if not is_frame(phi, tol):
        raise NotAFrameError("columns do not span the symplectic space")
    d = phi.shape[0]
    s = np.linalg.svd(gram(phi), compute_uv=False)
    return FrameBounds(lower=float(s[d - 1]), upper=float(s[0]))


def dual_frame(phi, tol: ToleranceProfile = DEFAULT_TOL) -> np.ndarray:
    """Canonical dual frame F^{-1} @ phi with F the frame operator.

    Satisfies x = sum_i [phi_i, x] phi'_i = -sum_i [phi'_i, x] phi_i.
    """
    phi = _check_synthesis(phi)
    if not is_frame(phi, tol):
        raise NotAFrameError("columns do not span the symplectic space")
    return np.linalg.solve(frame_operator(phi), phi)


def factor_gram(g, tol: ToleranceProfile = DEFAULT_TOL) -> np.ndarray:
    """Recover a synthesis matrix from a skew-symmetric Gram matrix.

    Returns phi = D @ U where U has orthonormal rows and D repeats the
    square roots of the canonical block values, so that gram(phi) equals
    the input.  The result is canonical only up to symplectic equivalence;
    compare Grams, never synthesis matrices.
    """
    g = check_skew(g, tol)
    rank = rank_by_sv(g, tol)
    if rank == 0:
        raise FactorizationError("zero matrix has no frame factorization")
    if rank % 2 != 0:
        raise FactorizationError(f"numerical rank {rank} is odd; inconsistent tolerances")
    form = skew_spectral_form(g, tol)
    n = g.shape[0]
    u = form.w[n - form.rank :, :]
    d_diag = np.sqrt(np.repeat(form.lambdas, 2))
    return d_diag[:, None] * u


def is_tight(g, d: int, tol: ToleranceProfile = DEFAULT_TOL) -> Optional[float]:
    """Return the tightness constant c if ``g`` is the Gram of a c-tight frame.

    Tightness of a rank-d skew Gram is the cubic identity g^3 = -c^2 g with
    c read off as the largest singular value; returns None when either the
    rank or the residual test fails.
    """
    g = check_skew(g, tol)
    if rank_by_sv(g, tol) != d:
        return None
    c = float(np.linalg.svd(g, compute_uv=False)[0])
    if c <= 0.0:
        return None
    resid = np.linalg.norm(g @ g @ g + c * c * g)
    if resid > tol.residual_rel_tol * c * c * np.linalg.norm(g):
        return None
    return c


def is_equiangular(g, tol: ToleranceProfile = DEFAULT_TOL) -> Optional[float]:
    """Return the common off-diagonal modulus mu, or None."""
    g = check_skew(g, tol)
    n = g.shape[0]
    if n < 2:
        return None
    off = ~np.eye(n, dtype=bool)
    mods = np.abs(g[off])
    mu = float(np.mean(mods))
    if mu <= 0.0:
        return None
    if np.max(np.abs(mods - mu)) > tol.entry_tol * mu:
        return None
    return mu


def certify_etf(g, d: int, tol: ToleranceProfile = DEFAULT_TOL) -> Optional[EtfCertificate]:
    """Verify that ``g`` is the Gram matrix of a d-dimensional ETF.

    Checks tightness, equiangularity, the size restriction n in {d, d+1},
    and the relation between c and mu for the respective size.  Returns a
    certificate carrying the measured residuals, or None.
    """
    g = check_skew(g, tol)
    n = g.shape[0]
    if n not in (d, d + 1):
        return None
    c = is_tight(g, d, tol)
    if c is None:
        return None
    mu = is_equiangular(g, tol)
    if mu is None:
        return None
    c_expected = mu * np.sqrt(n - 1) if n == d else mu * np.sqrt(n)
    if abs(c - c_expected) > tol.residual_rel_tol * c:
        return None
    off = ~np.eye(n, dtype=bool)
    eq_res = float(np.max(np.abs(np.abs(g[off]) - mu)) / mu)
    t_res = float(np.linalg.norm(g @ g @ g + c * c * g) / (c * c * np.linalg.norm(g)))
    return EtfCertificate(
        d=d, n=n, mu=mu, c=c, equiangular_residual=eq_res, tightness_residual=t_res
    )


def admissible_sizes(d: int) -> set[int]:
    """Sizes n for which a d-by-n ETF can exist in symplectic dimension d.

    This is a necessary condition only; existence beyond constructed orders
    is open and never asserted here.
    """
    if d < 2 or d % 2 != 0:
        raise ValueError(f"symplectic dimension must be even and >= 2, got {d}")
    if d == 2:
        return {2, 3}
    return {d} if d % 4 == 0 else {d + 1}


def symplectic_witness(phi, tol: ToleranceProfile = DEFAULT_TOL) -> np.ndarray:
    """Symplectic M with M @ psi = phi, where psi = factor_gram(gram(phi)).

    Since phi and psi share a Gram matrix, the unique solution of
    M @ psi = phi preserves the symplectic form.
    """
    phi = _check_synthesis(phi)
    if not is_frame(phi, tol):
        raise NotAFrameError("columns do not span the symplectic space")
    psi = factor_gram(gram(phi), tol)
    return phi @ psi.T @ np.linalg.inv(psi @ psi.T)
