"""Independent constructions built on the ``galois`` package, used only by tests."""

from __future__ import annotations

import itertools
import warnings
from functools import lru_cache

import numpy as np

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    import galois


@lru_cache(maxsize=None)
def field(q: int, modulus: str | None = None):
    return galois.GF(q, irreducible_poly=modulus) if modulus else galois.GF(q)


def gf4():
    return field(4, "x^2+x+1")


def projective_points(GF, dim):
    """Normalized representatives (first nonzero coordinate 1), any order."""
    out = []
    for v in itertools.product(range(GF.order), repeat=dim + 1):
        lead = next((c for c in v if c), None)
        if lead == 1:
            out.append(v)
    return out


def power_sum_points(GF, nvars, exponents):
    pts = projective_points(GF, nvars - 1)
    keep = []
    for v in pts:
        x = GF(list(v))
        if all(int(np.sum(x**e)) == 0 for e in exponents):
            keep.append(v)
    return keep


def monomials(nvars, degree):
    return [e for e in itertools.product(range(degree + 1), repeat=nvars) if sum(e) == degree]


def eval_monomials(GF, points, exps):
    P = GF(np.array(points, dtype=np.int64))
    out = GF.Zeros((len(exps), len(points)))
    for i, e in enumerate(exps):
        v = GF.Ones(len(points))
        for j, k in enumerate(e):
            v = v * P[:, j] ** k
        out[i] = v
    return out


def taylor_coeff(GF, f_coeffs, exps, base, direction, k):
    """Coefficient of t^k in f(base + t * direction), f given by coefficients over ``exps``."""
    total = galois.Poly([0], field=GF)
    for c, e in zip(f_coeffs, exps):
        if not c:
            continue
        term = galois.Poly([int(c)], field=GF)
        for i, ei in enumerate(e):
            lin = galois.Poly([int(direction[i]), int(base[i])], field=GF)  # direction * t + base
            term = term * lin**ei
        total = total + term
    coeffs = total.coeffs[::-1]
    return GF(int(coeffs[k])) if k < len(coeffs) else GF(0)


def binary_weight_distribution(gen: np.ndarray) -> dict[int, int]:
    """All 2^k codewords of a binary code, encoded with plain integer arithmetic."""
    k, n = gen.shape
    G = gen.astype(np.int64)
    counts: dict[int, int] = {}
    for start in range(0, 2**k, 4096):
        idx = np.arange(start, min(2**k, start + 4096))
        msgs = (idx[:, None] >> np.arange(k)[None, :]) & 1
        w = ((msgs @ G) % 2).sum(axis=1)
        for val, c in zip(*np.unique(w, return_counts=True)):
            counts[int(val)] = counts.get(int(val), 0) + int(c)
    return counts
