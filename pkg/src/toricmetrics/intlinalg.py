"""Exact integer linear algebra for lattice computations.

Matrices are numpy arrays of dtype=object holding Python ints, so arithmetic
is exact and never overflows.  Everything here is cubic elimination on tiny
matrices (polytope normal data, d <= ~20), which is entirely adequate.

Conventions: ``smith_normal_form(A)`` returns unimodular ``U, V`` and diagonal
``D`` with ``U @ A @ V == D``, nonnegative diagonal and divisibility chain
d_1 | d_2 | ... .
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from .errors import DomainError


def as_int_matrix(rows) -> np.ndarray:
    """Copy ``rows`` into a 2-d object array of Python ints.

    Accepts nested sequences or numpy arrays; float entries must be
    integer-valued.
    """
    a = np.asarray(rows)
    if a.ndim != 2:
        raise DomainError(f"expected a matrix, got array of shape {a.shape}")
    out = np.empty(a.shape, dtype=object)
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            v = a[i, j]
            if isinstance(v, (int, np.integer)):
                out[i, j] = int(v)
            elif float(v).is_integer():
                out[i, j] = int(float(v))
            else:
                raise DomainError(f"matrix entry {v!r} is not an integer")
    return out


def identity(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def exgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and g == s*a + t*b."""
    old_r, r = int(a), int(b)
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def is_primitive(vec) -> bool:
    """True iff the integer vector has gcd of entries equal to 1."""
    g = 0
    for v in vec:
        g = gcd(g, abs(int(v)))
    return g == 1


def smith_normal_form(A) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Smith normal form with transforms: U @ A @ V == D.

    U (m x m) and V (k x k) are unimodular; D is diagonal with nonnegative
    entries satisfying d_i | d_{i+1}.
    """
    D = as_int_matrix(A).copy()
    m, k = D.shape
    U = identity(m)
    V = identity(k)

    def rows_combine(i, j, a2):
        # left-multiply rows (i, j) by the 2x2 integer matrix a2 (det +-1)
        for M in (D, U):
            ri, rj = M[i, :].copy(), M[j, :].copy()
            M[i, :] = a2[0][0] * ri + a2[0][1] * rj
            M[j, :] = a2[1][0] * ri + a2[1][1] * rj

    def cols_combine(i, j, a2):
        for M in (D, V):
            ci, cj = M[:, i].copy(), M[:, j].copy()
            M[:, i] = a2[0][0] * ci + a2[1][0] * cj
            M[:, j] = a2[0][1] * ci + a2[1][1] * cj

    t = 0
    while t < min(m, k):
        # pick the nonzero entry of smallest magnitude as pivot
        best = None
        for i in range(t, m):
            for j in range(t, k):
                if D[i, j] != 0 and (best is None or abs(D[i, j]) < abs(D[best[0], best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            rows_combine(t, best[0], ((0, 1), (1, 0)))
        if best[1] != t:
            cols_combine(t, best[1], ((0, 1), (1, 0)))

        while True:
            for i in range(t + 1, m):
                if D[i, t] != 0:
                    g, s, u = exgcd(D[t, t], D[i, t])
                    rows_combine(t, i, ((s, u), (-D[i, t] // g, D[t, t] // g)))
            for j in range(t + 1, k):
                if D[t, j] != 0:
                    g, s, u = exgcd(D[t, t], D[t, j])
                    cols_combine(t, j, ((s, u), (-D[t, j] // g, D[t, t] // g)))
            if all(D[i, t] == 0 for i in range(t + 1, m)):
                # pivot must divide every remaining entry for the chain
                bad = None
                p = D[t, t]
                for i in range(t + 1, m):
                    for j in range(t + 1, k):
                        if D[i, j] % p != 0:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                rows_combine(t, bad, ((1, 1), (0, 1)))
        t += 1

    # normalize signs on the diagonal via row scaling (det of U flips, still unimodular)
    for i in range(min(m, k)):
        if D[i, i] < 0:
            D[i, :] = -D[i, :]
            U[i, :] = -U[i, :]
    return U, D, V


def invariant_factors(A) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form of A."""
    _, D, _ = smith_normal_form(A)
    return [int(D[i, i]) for i in range(min(D.shape)) if D[i, i] != 0]


def rank(A) -> int:
    """Rank over the rationals (= number of nonzero invariant factors)."""
    return len(invariant_factors(A))


def kernel_basis(A) -> np.ndarray:
    """Integer basis of ker(A) intersected with Z^k, as columns.

    Sign-normalized so the first nonzero entry of each basis vector is
    positive.  Columns are ordered as produced by the normal form.
    """
    A = as_int_matrix(A)
    _, D, V = smith_normal_form(A)
    r = len([i for i in range(min(D.shape)) if D[i, i] != 0])
    basis = V[:, r:].copy()
    for j in range(basis.shape[1]):
        col = basis[:, j]
        lead = next((v for v in col if v != 0), 1)
        if lead < 0:
            basis[:, j] = -col
    return basis


def index_in_saturation(A) -> int:
    """Index of the column lattice of A inside its saturation.

    A must have full column rank; the index is the product of the invariant
    factors.
    """
    A = as_int_matrix(A)
    factors = invariant_factors(A)
    if len(factors) != A.shape[1]:
        raise DomainError("columns are linearly dependent; saturation index undefined")
    out = 1
    for f in factors:
        out *= f
    return out


def det_exact(A) -> int:
    """Exact determinant of a square integer matrix (Fraction elimination)."""
    A = as_int_matrix(A)
    n, k = A.shape
    if n != k:
        raise DomainError("determinant requires a square matrix")
    M = [[Fraction(int(A[i, j])) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if M[r][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            M[c], M[pivot] = M[pivot], M[c]
            det = -det
        det *= M[c][c]
        inv = 1 / M[c][c]
        for r in range(c + 1, n):
            factor = M[r][c] * inv
            if factor:
                M[r] = [a - factor * b for a, b in zip(M[r], M[c])]
    assert det.denominator == 1
    return int(det)


def unimodular_inverse(M) -> np.ndarray:
    """Exact inverse of a unimodular integer matrix."""
    M = as_int_matrix(M)
    d = det_exact(M)
    if abs(d) != 1:
        raise DomainError(f"matrix has determinant {d}, not unimodular")
    n = M.shape[0]
    aug = [[Fraction(int(M[i, j])) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for c in range(n):
        pivot = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [a * inv for a in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                factor = aug[r][c]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[c])]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            v = aug[i][n + j]
            assert v.denominator == 1
            out[i, j] = int(v)
    return out
