"""Dense linear algebra over GF(q) on numpy arrays of element codes."""

from __future__ import annotations

import numpy as np

from .gf import FieldSpec


def as_matrix(a, field: FieldSpec) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2:
        a = a.reshape(-1, a.shape[-1] if a.ndim else 0)
    return a.astype(field.dtype, copy=True)


def rref(a, field: FieldSpec, *, full: bool = True) -> tuple[np.ndarray, list[int]]:
    """Row echelon form with unit pivots.

    With ``full=True`` the form is reduced (entries above pivots cleared too);
    ``full=False`` is enough for rank and roughly halves the work.
    Returns the transformed matrix and the pivot columns.
    """
    A = as_matrix(a, field)
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    binary = field.p == 2
    mul, inv = field.mul_table, field.inv_table
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        lead = A[r, c]
        if lead != 1:
            A[r, c:] = mul[inv[lead], A[r, c:]]
        if full:
            targets = np.flatnonzero(A[:, c])
            targets = targets[targets != r]
        else:
            targets = r + 1 + np.flatnonzero(A[r + 1 :, c])
        if targets.size:
            f = A[targets, c]
            prod = mul[f[:, None], A[r, c:][None, :]]
            if binary:
                A[targets, c:] ^= prod
            else:
                A[targets, c:] = field.sub_table[A[targets, c:], prod]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(a, field: FieldSpec) -> int:
    A = np.asarray(a)
    if A.size == 0:
        return 0
    if A.shape[0] > A.shape[1]:
        A = A.T
    return len(rref(A, field, full=False)[1])


def row_basis(a, field: FieldSpec) -> np.ndarray:
    """Nonzero rows of the reduced echelon form (a basis of the row space)."""
    R, piv = rref(a, field)
    return R[: len(piv)]


def kernel(a, field: FieldSpec, ncols: int | None = None) -> np.ndarray:
    """Basis of the right kernel {x : a x = 0}, rows in reduced echelon form."""
    A = np.asarray(a)
    if ncols is None:
        ncols = A.shape[1]
    if A.size == 0:
        return np.eye(ncols, dtype=field.dtype)
    R, piv = rref(A, field)
    free = [c for c in range(ncols) if c not in set(piv)]
    K = np.zeros((len(free), ncols), dtype=field.dtype)
    for i, f in enumerate(free):
        K[i, f] = 1
        for r, pc in enumerate(piv):
            K[i, pc] = field.neg_table[R[r, f]]
    if len(free) == 0:
        return K
    return row_basis(K, field)


def matmul(a, b, field: FieldSpec) -> np.ndarray:
    """Matrix product over GF(p^m).

    Each operand is split into its m coefficient planes and the m^2 plane
    products are done as exact float64 BLAS products, then reduced mod p and
    mod the field modulus.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    p, m = field.p, field.m
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[1] * (p - 1) ** 2 >= 2**52:
        raise ValueError("inner dimension too large for exact float accumulation")
    da = field.digit_table[a]  # (r, k, m)
    db = field.digit_table[b]
    planes = [np.zeros((a.shape[0], b.shape[1]), dtype=np.int64) for _ in range(2 * m - 1)]
    for i in range(m):
        ai = da[..., i].astype(np.float64)
        for j in range(m):
            prod = ai @ db[..., j].astype(np.float64)
            planes[i + j] = (planes[i + j] + np.rint(prod).astype(np.int64)) % p
    # reduce x^d for d >= m using the monic modulus: x^m = -sum c_i x^i
    mod = field.modulus
    for d in range(2 * m - 2, m - 1, -1):
        top = planes[d]
        if not top.any():
            continue
        for i in range(m):
            if mod[i]:
                k = d - m + i
                planes[k] = (planes[k] - top * mod[i]) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for i in reversed(range(m)):
        out = out * p + planes[i]
    return out.astype(field.dtype)

