from __future__ import annotations

import numpy as np
import pytest
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_mul, gf_rem

from dlcodes.gf import FieldSpec, gf

SMALL_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)


def oracle_mul(F: FieldSpec, a: int, b: int) -> int:
    """Product of two element codes via sympy's GF(p)[x] arithmetic."""
    pa = [ZZ(c) for c in reversed(F.digits(a))]
    pb = [ZZ(c) for c in reversed(F.digits(b))]
    mod = [ZZ(c) for c in reversed(F.modulus)]
    r = gf_rem(gf_mul(pa, pb, F.p, ZZ), mod, F.p, ZZ)
    coeffs = [int(c) for c in reversed(r)] + [0] * F.m
    return F.from_digits(coeffs[: F.m])


def oracle_add(F: FieldSpec, a: int, b: int) -> int:
    return F.from_digits([(x + y) % F.p for x, y in zip(F.digits(a), F.digits(b))])


def scalar_matmul(a, b, F: FieldSpec) -> np.ndarray:
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            acc = 0
            for t in range(a.shape[1]):
                acc = oracle_add(F, acc, oracle_mul(F, int(a[i, t]), int(b[t, j])))
            out[i, j] = acc
    return out


def scalar_rank(a, F: FieldSpec) -> int:
    """Plain Gaussian elimination on Python ints with the sympy oracle products."""
    A = [[int(x) for x in row] for row in np.asarray(a)]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = next(x for x in range(1, F.q) if oracle_mul(F, A[r][c], x) == 1)
        A[r] = [oracle_mul(F, inv, x) for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [oracle_add(F, x, F.neg(oracle_mul(F, f, y))) for x, y in zip(A[i], A[r])]
        r += 1
    return r


@pytest.fixture(params=SMALL_Q)
def small_field(request) -> FieldSpec:
    return gf(request.param)


# acceptance results, filled by test_acceptance.py and echoed in the terminal summary
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}: {detail}")
