"""Section spaces L(nH - sum m_j B_j) on the blown-up plane.

Sections are plane forms of degree n vanishing to order >= m_j at the j-th
rational point of P^2 (canonical order).  A section is evaluated at a surface
point (P, L) through its order-m_j Taylor coefficient along the line L,
obtained by substituting P + tQ, where Q is the first point of L after P in
canonical order.  No formal derivatives are used, so characteristic p needs no
Hasse-derivative bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import IndexOutOfRange, InsufficientVanishing
from .gf import Felt, FieldSpec
from .linalg import kernel
from .projgeom import HomogPoly, ProjPoint, monomial_basis, projective_array


@dataclass(frozen=True)
class LineBundleA2:
    """nH - sum_j m_j B_j; ``m`` is indexed by canonical base point order."""

    n: int
    m: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if self.n < 0 or any(x < 0 for x in self.m):
            raise ValueError("degree and multiplicities must be non-negative")

    @classmethod
    def padded(cls, n: int, m_prefix, q: int, points=None) -> "LineBundleA2":
        """Multiplicities placed on the first points (or the given indices), zero elsewhere."""
        total = q * q + q + 1
        m = [0] * total
        idx = list(points) if points is not None else list(range(len(m_prefix)))
        if len(idx) != len(m_prefix):
            raise ValueError("need one point index per multiplicity")
        for i, v in zip(idx, m_prefix):
            if not 0 <= i < total:
                raise IndexOutOfRange(f"point index {i} outside [0, {total})")
            m[i] = int(v)
        return cls(n, tuple(m))

    def check_length(self, q: int):
        if len(self.m) != q * q + q + 1:
            raise IndexOutOfRange(f"{len(self.m)} multiplicities for {q * q + q + 1} points of P^2(F_{q})")

    def combine(self, other: "LineBundleA2", i1: int, i2: int) -> "LineBundleA2":
        """V1^{i1} ⊗ V2^{i2}."""
        return LineBundleA2(i1 * self.n + i2 * other.n, tuple(i1 * a + i2 * b for a, b in zip(self.m, other.m)))


@dataclass(frozen=True)
class SectionBasis:
    bundle: LineBundleA2
    polys: tuple[HomogPoly, ...]
    coeffs: np.ndarray  # (dim, #monomials), rows in reduced echelon form

    @property
    def dim(self) -> int:
        return len(self.polys)


def excellence_hypotheses(bundle: LineBundleA2, q: int) -> dict[str, bool]:
    """Numerical conditions under which the Harbourne h^0 formula is claimed.

    Condition 4 is read as 3n > sum of all m_j.
    """
    n, m = bundle.n, bundle.m
    return {
        "degree_cap": n <= 3 * (q - 1),
        "three_largest": n >= sum(m[:3]),
        "non_increasing": all(a >= b for a, b in zip(m, m[1:])),
        "anticanonical_positive": 3 * n > sum(m),
    }


def h0_formula(bundle: LineBundleA2) -> int:
    """(n(n+3) - sum m_j(m_j+1)) / 2 + 1; may be negative outside its range."""
    n = bundle.n
    return (n * (n + 3) - sum(x * (x + 1) for x in bundle.m)) // 2 + 1


def _binom_mod(a: int, b: int, p: int) -> int:
    return comb(a, b) % p


def _frame(base_coords) -> tuple[int, int]:
    """Coordinates completing the normalized base point to a basis (unit vectors)."""
    lead = next(i for i, c in enumerate(base_coords) if c)
    a, b = (i for i in range(3) if i != lead)
    return a, b


def _taylor_rows(base_coords, order: int, degree: int, field: FieldSpec) -> np.ndarray:
    """Rows: coefficients of y1^r y2^s (r+s < order) of X^e(P + y1 e_a + y2 e_b), per monomial e."""
    a, b = _frame(base_coords)
    monos = monomial_basis(3, degree)
    rows = []
    p = field.p
    for o in range(order):
        for r in range(o, -1, -1):
            s = o - r
            row = []
            for e in monos:
                if e[a] < r or e[b] < s:
                    row.append(0)
                    continue
                c = _binom_mod(e[a], r, p) * _binom_mod(e[b], s, p) % p
                v = c  # prime-subfield element: code == residue
                if v:
                    for i in range(3):
                        k = e[i] - (r if i == a else s if i == b else 0)
                        if k:
                            v = field.mul(v, field.pow(base_coords[i], k))
                            if not v:
                                break
                row.append(v)
            rows.append(row)
    return np.array(rows, dtype=field.dtype).reshape(len(rows), len(monos))


def vanishing_matrix(bundle: LineBundleA2, field: FieldSpec) -> np.ndarray:
    """Linear conditions (rows) on degree-n forms (columns, graded-lex) for the multiplicities."""
    bundle.check_length(field.q)
    pts = projective_array(2, field)
    ncols = len(monomial_basis(3, bundle.n))
    blocks = [
        _taylor_rows(tuple(int(c) for c in pts[j]), mj, bundle.n, field)
        for j, mj in enumerate(bundle.m)
        if mj > 0
    ]
    if not blocks:
        return np.zeros((0, ncols), dtype=field.dtype)
    return np.vstack(blocks)


def section_basis(bundle: LineBundleA2, field: FieldSpec) -> SectionBasis:
    V = vanishing_matrix(bundle, field)
    ncols = len(monomial_basis(3, bundle.n))
    K = kernel(V, field, ncols=ncols) if V.shape[0] else np.eye(ncols, dtype=field.dtype)
    polys = tuple(HomogPoly.from_vector(field, 3, bundle.n, row) for row in K)
    K.setflags(write=False)
    return SectionBasis(bundle, polys, K)


@lru_cache(maxsize=4096)
def _points_on_line(line: ProjPoint) -> tuple[tuple[int, ...], ...]:
    F = line.field
    pts = projective_array(2, F)
    dots = np.zeros(len(pts), dtype=F.dtype)
    for i in range(3):
        dots = F.vadd(dots, F.vmul(pts[:, i], np.full(len(pts), line.coords[i], dtype=F.dtype)))
    return tuple(tuple(int(c) for c in row) for row in pts[dots == 0])


def second_point(base: ProjPoint, line: ProjPoint) -> tuple[int, ...]:
    """First point of ``line`` in canonical order distinct from ``base``."""
    for pt in _points_on_line(line):
        if pt != base.coords:
            return pt
    raise AssertionError("a projective line has at least three points")


def line_taylor_functionals(base, direction, degree: int, upto: int, field: FieldSpec) -> np.ndarray:
    """T[k, e] = coefficient of t^k in X^e(base + t * direction), k = 0..upto."""
    monos = monomial_basis(3, degree)
    out = np.zeros((upto + 1, len(monos)), dtype=np.int64)
    p = field.p
    for col, e in enumerate(monos):
        poly = [1] + [0] * upto
        for i in range(3):
            if not e[i]:
                continue
            # (P_i + t Q_i)^{e_i}, truncated
            factor = [0] * (upto + 1)
            for r in range(min(e[i], upto) + 1):
                c = _binom_mod(e[i], r, p)
                if c:
                    v = field.mul(c, field.pow(base[i], e[i] - r))
                    factor[r] = field.mul(v, field.pow(direction[i], r))
            new = [0] * (upto + 1)
            for x, cx in enumerate(poly):
                if cx:
                    for y in range(upto + 1 - x):
                        if factor[y]:
                            new[x + y] = field.add(new[x + y], field.mul(cx, factor[y]))
            poly = new
        out[:, col] = poly
    return out.astype(field.dtype)


def eval_section(s: HomogPoly, pt, mult: int, *, base_coords=None, direction=None) -> Felt:
    """Fiber value of section ``s`` at the surface point ``pt`` = (base, line).

    ``base_coords``/``direction`` override the normalized representatives
    (used to check that other representatives only rescale the value).
    """
    F = s.field
    base = pt.base
    if mult == 0:
        coords = base_coords if base_coords is not None else base.coords
        return Felt(F, s.evaluate_codes(coords))
    b = base_coords if base_coords is not None else base.coords
    Q = direction if direction is not None else second_point(base, pt.line)
    T = line_taylor_functionals(b, Q, s.degree, mult, F)
    vec = s.to_vector()
    coeffs = []
    for k in range(mult + 1):
        acc = 0
        for a, c in zip(T[k], vec):
            if a and c:
                acc = F.add(acc, F.mul(int(a), int(c)))
        coeffs.append(acc)
    if any(coeffs[:mult]):
        raise InsufficientVanishing(f"section does not vanish to order {mult} at {base}")
    return Felt(F, coeffs[mult])


def vanishes_on_exceptional(s: HomogPoly, base: ProjPoint, mult: int) -> bool:
    """True when the order-``mult`` coefficient is zero in every direction at ``base``."""
    from .dl_surfaces import SurfacePointA2, lines_through

    return all(not eval_section(s, SurfacePointA2(base, L), mult) for L in lines_through(base))
