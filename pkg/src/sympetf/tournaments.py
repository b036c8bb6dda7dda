"""Tournaments through their Seidel adjacency matrices.

A Seidel matrix is an integer skew-symmetric matrix with zero diagonal
and +-1 off the diagonal; entry s_ij = 1 means vertex i dominates j.
Diamonds are the 4-vertex subtournaments whose Seidel minor has
determinant 9 (a vertex dominating, or dominated by, a 3-cycle).  All
counting is exact integer arithmetic; floating point enters only in
kernel extraction and spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Optional

import numpy as np

from .errors import InvalidSeidelError, NotEquiangularError, RoundingError
from .frames import is_equiangular
from .skewlinalg import DEFAULT_TOL, ToleranceProfile, rank_by_sv

__all__ = [
    "check_seidel",
    "random_tournament",
    "seidel_from_gram",
    "DegreeStats",
    "degree_stats",
    "gamma",
    "count_diamonds_bruteforce",
    "count_diamonds_formula",
    "diamond_upper_bound",
    "is_doubly_regular",
    "switch",
    "flat_kernel",
]

def _perm4_terms():
    terms = []
    for p in permutations(range(4)):
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
        terms.append((p, -1 if inv % 2 else 1))
    return terms


_PERM4 = _perm4_terms()


def check_seidel(s) -> np.ndarray:
    """Validate and return a Seidel adjacency matrix as an int64 array."""
    s = np.asarray(s)
    if s.ndim != 2 or s.shape[0] != s.shape[1] or s.size == 0:
        raise InvalidSeidelError(f"expected a square matrix, got shape {s.shape}")
    si = s.astype(np.int64)
    if not np.array_equal(si, s):
        raise InvalidSeidelError("entries are not integers")
    if np.any(np.diag(si) != 0):
        raise InvalidSeidelError("diagonal entries must be zero")
    off = ~np.eye(si.shape[0], dtype=bool)
    if not np.all(np.abs(si[off]) == 1):
        raise InvalidSeidelError("off-diagonal entries must be +-1")
    if not np.array_equal(si, -si.T):
        raise InvalidSeidelError("matrix is not skew-symmetric")
    return si


def _check_skew_int(s) -> np.ndarray:
    """Weaker check used by flat_kernel: integer skew, diagonal zero."""
    s = np.asarray(s)
    if s.ndim != 2 or s.shape[0] != s.shape[1] or s.size == 0:
        raise InvalidSeidelError(f"expected a square matrix, got shape {s.shape}")
    si = s.astype(np.int64)
    if not np.array_equal(si, s) or not np.array_equal(si, -si.T):
        raise InvalidSeidelError("expected an integer skew-symmetric matrix")
    return si


def random_tournament(n: int, rng: np.random.Generator) -> np.ndarray:
    """Uniformly random tournament on n vertices."""
    if n < 1:
        raise ValueError("need at least one vertex")
    s = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            s[i, j] = 1 if rng.integers(0, 2) else -1
            s[j, i] = -s[i, j]
    return s


def seidel_from_gram(g, tol: ToleranceProfile = DEFAULT_TOL) -> np.ndarray:
    """Scale an equiangular Gram matrix by 1/mu and round to a Seidel matrix."""
    mu = is_equiangular(g, tol)
    if mu is None:
        raise NotEquiangularError("Gram matrix is not equiangular")
    scaled = np.asarray(g, dtype=float) / mu
    s = np.rint(scaled).astype(np.int64)
    if np.max(np.abs(scaled - s)) > tol.entry_tol or np.any(np.abs(s) > 1):
        raise RoundingError("scaled entries do not round to 0 or +-1")
    return check_seidel(s)


@dataclass(frozen=True)
class DegreeStats:
    """Out/in degrees and the matrix of common out-neighborhood sizes."""

    out_degrees: np.ndarray
    in_degrees: np.ndarray
    common_out: np.ndarray


def degree_stats(s) -> DegreeStats:
    s = check_seidel(s)
    dominates = (s == 1).astype(np.int64)
    return DegreeStats(
        out_degrees=dominates.sum(axis=1),
        in_degrees=dominates.sum(axis=0),
        common_out=dominates @ dominates.T,
    )


def gamma(s, i: int, j: int) -> int:
    """|N+(i) & N-(j)| + |N-(i) & N+(j)|, the disagreement count of a pair."""
    s = check_seidel(s)
    n = s.shape[0]
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"vertex index out of range for n={n}")
    if i == j:
        raise ValueError("gamma requires two distinct vertices")
    out_i, in_i = s[i] == 1, s[i] == -1
    out_j, in_j = s[j] == 1, s[j] == -1
    return int(np.count_nonzero(out_i & in_j) + np.count_nonzero(in_i & out_j))


def _det4(m: np.ndarray) -> int:
    """Exact integer determinant of a 4x4 matrix via the Leibniz formula."""
    total = 0
    for p, sgn in _PERM4:
        total += sgn * int(m[0, p[0]]) * int(m[1, p[1]]) * int(m[2, p[2]]) * int(m[3, p[3]])
    return total


def count_diamonds_bruteforce(s) -> int:
    """Count diamonds by checking the determinant of every 4x4 principal minor."""
    s = check_seidel(s)
    n = s.shape[0]
    if n < 4:
        return 0
    count = 0
    for idx in combinations(range(n), 4):
        sub = s[np.ix_(idx, idx)]
        det = _det4(sub)
        if det == 9:
            count += 1
        elif det != 1:
            raise InvalidSeidelError(f"principal minor {det} is neither 1 nor 9")
    return count


def count_diamonds_formula(s) -> int:
    """Diamond count from the square of the Seidel matrix.

    delta = n^2 (n-1)(n-2)/96 - (1/16) sum_{i<j} ((S^2)_ij)^2, evaluated in
    exact integer arithmetic.  A fractional result means the input was not
    a genuine Seidel matrix.
    """
    s = check_seidel(s)
    n = s.shape[0]
    s2 = s @ s
    iu = np.triu_indices(n, k=1)
    q = int(np.sum(s2[iu] ** 2))
    num = n * n * (n - 1) * (n - 2) - 6 * q
    delta, rem = divmod(num, 96)
    if rem != 0 or delta < 0:
        raise InvalidSeidelError(f"closed form gave non-integer or negative count {num}/96")
    return delta


def diamond_upper_bound(n: int) -> Fraction:
    """Maximum possible diamond count n(n-1)(n-3)(n+1)/96 for odd n.

    Returned as an exact Fraction: the value is an integer exactly when
    n = 3 mod 4, which is when the bound can be attained.
    """
    if n % 2 == 0:
        raise ValueError(f"diamond bound is stated for odd n, got {n}")
    return Fraction(n * (n - 1) * (n - 3) * (n + 1), 96)


def is_doubly_regular(s) -> bool:
    """All out-degrees (n-1)/2 and all common out-degrees (n-3)/4."""
    s = check_seidel(s)
    n = s.shape[0]
    if n % 4 != 3:
        return False
    stats = degree_stats(s)
    if np.any(stats.out_degrees != (n - 1) // 2):
        return False
    off = ~np.eye(n, dtype=bool)
    return bool(np.all(stats.common_out[off] == (n - 3) // 4))


def switch(s, eps) -> np.ndarray:
    """Conjugate by the diagonal +-1 matrix built from ``eps``."""
    s = check_seidel(s)
    eps = np.asarray(eps, dtype=np.int64).ravel()
    if eps.shape[0] != s.shape[0]:
        raise ValueError(f"switching vector length {eps.shape[0]} does not match n={s.shape[0]}")
    if np.any(np.abs(eps) != 1):
        raise ValueError("switching vector entries must be +-1")
    return s * np.outer(eps, eps)


def flat_kernel(s, tol: ToleranceProfile = DEFAULT_TOL) -> Optional[np.ndarray]:
    """Extract a +-1 kernel vector when the kernel is one-dimensional and flat.

    Returns the vector normalized to have first entry +1, with the exact
    integer identity s @ x == 0 re-verified; returns None otherwise.
    """
    s = _check_skew_int(s)
    n = s.shape[0]
    sf = s.astype(float)
    rank = rank_by_sv(sf, tol) if np.any(s != 0) else 0
    if n - rank != 1:
        return None
    _, _, vt = np.linalg.svd(sf)
    v = vt[-1]
    mods = np.abs(v)
    m = float(np.mean(mods))
    if m == 0.0 or np.max(np.abs(mods - m)) > tol.entry_tol * m:
        return None
    x = np.rint(v / m).astype(np.int64)
    if np.any(np.abs(x) != 1) or np.any(s @ x != 0):
        return None
    if x[0] < 0:
        x = -x
    return x
