"""Dense numerical kernel: tolerances, singular-value rank, and the
canonical spectral form of real skew-symmetric matrices.

The canonical form of a skew-symmetric ``a`` is an orthogonal ``w`` and
positive block values ``lambdas`` (descending) with

    a = w.T @ blkdiag(0, l_1*J, ..., l_r*J) @ w,   J = [[0, 1], [-1, 0]],

where the zero block has size ``n - 2r``.  Everything downstream (Gram
factorization, tightness certificates) reduces to this decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotSkewSymmetricError

__all__ = [
    "ToleranceProfile",
    "DEFAULT_TOL",
    "SkewSpectralForm",
    "as_matrix",
    "rank_by_sv",
    "skew_spectral_form",
]


@dataclass(frozen=True)
class ToleranceProfile:
    """Relative tolerances used by every verification routine.

    rank_rel_tol: singular values below ``rank_rel_tol * sigma_max`` count as zero.
    residual_rel_tol: cap on relative residuals of algebraic identities.
    entry_tol: cap on entrywise deviations (skewness, integrality, equiangularity).
    """

    rank_rel_tol: float = 1e-10
    residual_rel_tol: float = 1e-9
    entry_tol: float = 1e-9

    def __post_init__(self):
        for name in ("rank_rel_tol", "residual_rel_tol", "entry_tol"):
            v = getattr(self, name)
            if not (0.0 < v < 1.0):
                raise ValueError(f"{name} must lie strictly between 0 and 1, got {v}")


DEFAULT_TOL = ToleranceProfile()


@dataclass(frozen=True)
class SkewSpectralForm:
    """Canonical form of a skew-symmetric matrix.

    ``w`` is n-by-n orthogonal, ``lambdas`` holds the r distinct-slot block
    values in descending order (each one is a nonzero singular value of the
    input, which occurs twice), and ``rank == 2 * r``.
    """

    w: np.ndarray
    lambdas: np.ndarray
    rank: int

    def reconstruct(self) -> np.ndarray:
        """Return w.T @ blkdiag(0, l_1*J, ..., l_r*J) @ w."""
        n = self.w.shape[0]
        b = np.zeros((n, n))
        off = n - self.rank
        for k, lam in enumerate(self.lambdas):
            i = off + 2 * k
            b[i, i + 1] = lam
            b[i + 1, i] = -lam
        return self.w.T @ b @ self.w


def as_matrix(a, dtype=float) -> np.ndarray:
    """Coerce to a 2-d array of the given dtype and reject non-finite entries."""
    m = np.asarray(a, dtype=dtype)
    if m.ndim != 2 or m.size == 0:
        raise ValueError(f"expected a nonempty 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains NaN or Inf entries")
    return m


def check_skew(a: np.ndarray, tol: ToleranceProfile = DEFAULT_TOL) -> np.ndarray:
    """Validate that ``a`` is square and skew-symmetric within entry_tol."""
    a = as_matrix(a)
    n, m = a.shape
    if n != m:
        raise NotSkewSymmetricError(f"matrix is {n}x{m}, not square")
    scale = max(1.0, float(np.linalg.norm(a)))
    asym = float(np.linalg.norm(a + a.T))
    if asym > tol.entry_tol * scale:
        raise NotSkewSymmetricError(
            f"asymmetry {asym:.3e} exceeds {tol.entry_tol:.1e} * {scale:.3e}"
        )
    return a


def rank_by_sv(a, tol: ToleranceProfile = DEFAULT_TOL) -> int:
    """Numerical rank: number of singular values above rank_rel_tol * sigma_max."""
    a = as_matrix(a)
    s = np.linalg.svd(a, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol.rank_rel_tol * s[0]))


def skew_spectral_form(a, tol: ToleranceProfile = DEFAULT_TOL) -> SkewSpectralForm:
    """Canonical spectral form of a real skew-symmetric matrix.

    Works through the SVD: for skew ``a`` with a = u s v^T one has
    a @ u_k = -s_k v_k, so each retained left singular vector pairs with
    its image under ``a`` to give one 2x2 rotation block.  Vectors already
    covered by an accepted block are skipped, which handles repeated
    singular values without explicit clustering.
    """
    a = check_skew(a, tol)
    a = (a - a.T) / 2.0  # kill roundoff asymmetry before decomposing
    n = a.shape[0]

    u, s, vt = np.linalg.svd(a)
    if s[0] == 0.0:
        return SkewSpectralForm(w=np.eye(n), lambdas=np.zeros(0), rank=0)
    rank = int(np.count_nonzero(s > tol.rank_rel_tol * s[0]))
    r = rank // 2

    pair_cols = []  # accepted (w_k, z_k) columns, interleaved
    lambdas = []
    for k in range(min(rank, n)):
        if len(lambdas) == r:
            break
        cand = u[:, k]
        if pair_cols:
            basis = np.column_stack(pair_cols)
            cand = cand - basis @ (basis.T @ cand)
        nr = np.linalg.norm(cand)
        if nr < 1e-6:
            continue  # already inside an accepted block
        wk = cand / nr
        awk = a @ wk
        lam = np.linalg.norm(awk)
        zk = -awk / lam
        if pair_cols:
            # one defensive re-orthogonalization pass for clustered spectra
            basis = np.column_stack(pair_cols)
            zk = zk - basis @ (basis.T @ zk)
            zk = zk / np.linalg.norm(zk)
        pair_cols.extend([wk, zk])
        lambdas.append(lam)

    # kernel completion: right singular vectors of the discarded values
    q_cols = [vt[k] for k in range(2 * len(lambdas), n)]
    q = np.column_stack(q_cols + pair_cols) if q_cols else np.column_stack(pair_cols)

    order = np.argsort(lambdas)[::-1]
    lam_sorted = np.asarray([lambdas[i] for i in order])
    off = n - 2 * len(lambdas)
    perm = list(range(off))
    for i in order:
        perm.extend([off + 2 * i, off + 2 * i + 1])
    q = q[:, perm]

    return SkewSpectralForm(w=q.T, lambdas=lam_sorted, rank=2 * len(lam_sorted))
