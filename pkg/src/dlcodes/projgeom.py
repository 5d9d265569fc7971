"""Projective points, homogeneous polynomials and rational point enumeration.

Point order
-----------
Normalized points (first nonzero coordinate equal to 1) are listed in graded
lexicographic order on their coordinate codes: by the sum of the codes, then
lexicographically descending, the same order used for exponent vectors.  For
P^1(GF(2)) this gives [1:0], [0:1], [1:1].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import ArityMismatch, DegreeMismatch, FieldMismatch
from .gf import Felt, FieldSpec


def _graded_key(vec):
    return (sum(vec), tuple(-v for v in vec))


def normalize_coords(coords, field: FieldSpec) -> tuple[int, ...]:
    coords = tuple(int(c) for c in coords)
    for c in coords:
        if c:
            if c == 1:
                return coords
            inv = field.inv(c)
            return tuple(field.mul(inv, x) for x in coords)
    raise ValueError("the zero vector is not a projective point")


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^dim over ``field``; ``coords`` are normalized element codes."""

    field: FieldSpec
    coords: tuple[int, ...]

    @classmethod
    def of(cls, field: FieldSpec, coords) -> "ProjPoint":
        vals = [c.value if isinstance(c, Felt) else c for c in coords]
        return cls(field, normalize_coords(vals, field))

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    @property
    def normalized(self) -> bool:
        return True

    @property
    def felts(self) -> tuple[Felt, ...]:
        return tuple(Felt(self.field, c) for c in self.coords)

    def encode(self) -> str:
        return ",".join(self.field.encode(c) for c in self.coords)

    def __str__(self):
        return "[" + ":".join(self.field.encode(c) for c in self.coords) + "]"


@lru_cache(maxsize=64)
def _projective_array(dim: int, field: FieldSpec) -> np.ndarray:
    q = field.q
    pts = []
    for lead in range(dim + 1):
        for tail in itertools.product(range(q), repeat=dim - lead):
            pts.append((0,) * lead + (1,) + tail)
    pts.sort(key=_graded_key)
    arr = np.array(pts, dtype=field.dtype).reshape(len(pts), dim + 1)
    arr.setflags(write=False)
    return arr


def projective_array(dim: int, field: FieldSpec) -> np.ndarray:
    """All points of P^dim(field) as an (N, dim+1) array of codes, canonical order."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    return _projective_array(dim, field)


def enumerate_projective(dim: int, field: FieldSpec) -> list[ProjPoint]:
    return [ProjPoint(field, tuple(int(c) for c in row)) for row in projective_array(dim, field)]


def projective_count(dim: int, q: int) -> int:
    return (q ** (dim + 1) - 1) // (q - 1)


def monomial_basis(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total ``degree`` in graded-lex order (x0^d first)."""
    if degree < 0:
        return []
    out = _monomials(nvars, degree)
    assert len(out) == comb(nvars - 1 + degree, degree)
    return list(out)


@lru_cache(maxsize=256)
def _monomials(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in _monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


class HomogPoly:
    """Homogeneous polynomial over a finite field.

    ``terms`` maps exponent vectors to nonzero coefficient codes.  The zero
    polynomial keeps its declared degree with an empty term map.
    """

    __slots__ = ("field", "nvars", "degree", "terms")

    def __init__(self, field: FieldSpec, nvars: int, degree: int, terms=None):
        if degree < 0 or degree > field.q**3 + 1:
            raise DegreeMismatch(f"degree {degree} outside [0, q^3+1] for {field!r}")
        self.field = field
        self.nvars = nvars
        self.degree = degree
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            c = c.value if isinstance(c, Felt) else int(c)
            if len(exp) != nvars:
                raise ArityMismatch(f"exponent {exp} has {len(exp)} entries, expected {nvars}")
            if sum(exp) != degree or min(exp) < 0:
                raise DegreeMismatch(f"exponent {exp} is not of degree {degree}")
            if c:
                clean[exp] = field.add(clean.get(exp, 0), c)
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean

    @classmethod
    def monomial(cls, field, exp, coeff=1) -> "HomogPoly":
        return cls(field, len(exp), sum(exp), {tuple(exp): coeff})

    @classmethod
    def from_vector(cls, field, nvars, degree, vec) -> "HomogPoly":
        """Coefficients in ``monomial_basis(nvars, degree)`` order."""
        basis = monomial_basis(nvars, degree)
        return cls(field, nvars, degree, {e: int(c) for e, c in zip(basis, vec) if c})

    @classmethod
    def power_sum(cls, field, nvars, exponent) -> "HomogPoly":
        terms = {}
        for i in range(nvars):
            e = [0] * nvars
            e[i] = exponent
            terms[tuple(e)] = 1
        return cls(field, nvars, exponent, terms)

    def to_vector(self) -> np.ndarray:
        basis = monomial_basis(self.nvars, self.degree)
        return np.array([self.terms.get(e, 0) for e in basis], dtype=self.field.dtype)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "HomogPoly"):
        if other.field != self.field:
            raise FieldMismatch("polynomials over different fields")
        if other.nvars != self.nvars:
            raise ArityMismatch("polynomials in different numbers of variables")

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        self._check(other)
        if other.degree != self.degree and other.terms and self.terms:
            raise DegreeMismatch("sum of forms of different degrees is not homogeneous")
        deg = self.degree if self.terms or not other.terms else other.degree
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = self.field.add(terms.get(e, 0), c)
        return HomogPoly(self.field, self.nvars, deg, terms)

    def __neg__(self) -> "HomogPoly":
        f = self.field
        return HomogPoly(f, self.nvars, self.degree, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        return self + (-other)

    def scale(self, c) -> "HomogPoly":
        c = c.value if isinstance(c, Felt) else int(c)
        f = self.field
        return HomogPoly(f, self.nvars, self.degree, {e: f.mul(c, v) for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, HomogPoly):
            return self.scale(other)
        self._check(other)
        f = self.field
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = f.add(terms.get(e, 0), f.mul(c1, c2))
        return HomogPoly(f, self.nvars, self.degree + other.degree, terms)

    def __eq__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return (
            self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
            and (self.degree == other.degree or not self.terms)
        )

    def __repr__(self):
        f = self.field
        if not self.terms:
            return f"HomogPoly(0, deg={self.degree})"
        parts = []
        for e in sorted(self.terms, key=_graded_key):
            mono = "*".join(f"X{i}^{k}" if k > 1 else f"X{i}" for i, k in enumerate(e) if k) or "1"
            parts.append(f"{f.encode(self.terms[e])}*{mono}")
        return " + ".join(parts)

    def __call__(self, point) -> Felt:
        return eval_poly(self, point)

    def evaluate_codes(self, coords) -> int:
        f = self.field
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(coords, e):
                if k:
                    v = f.mul(v, f.pow(int(x), k))
                    if not v:
                        break
            total = f.add(total, v)
        return total

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """Evaluate at every row of an (N, nvars) code array."""
        f = self.field
        points = np.asarray(points)
        if points.shape[1] != self.nvars:
            raise ArityMismatch(f"{self.nvars}-variable form on {points.shape[1]} coordinates")
        out = np.zeros(points.shape[0], dtype=f.dtype)
        for e, c in self.terms.items():
            v = np.full(points.shape[0], c, dtype=f.dtype)
            for i, k in enumerate(e):
                if k:
                    v = f.vmul(v, f.vpow(points[:, i], k))
            out = f.vadd(out, v)
        return out


def eval_poly(f: HomogPoly, P) -> Felt:
    coords = P.coords if isinstance(P, ProjPoint) else tuple(P)
    if len(coords) != f.nvars:
        raise ArityMismatch(f"{f.nvars}-variable form at a point with {len(coords)} coordinates")
    if isinstance(P, ProjPoint) and P.field != f.field:
        raise FieldMismatch("point and polynomial over different fields")
    return Felt(f.field, f.evaluate_codes(coords))


def monomial_values(points: np.ndarray, exponents, field: FieldSpec) -> np.ndarray:
    """Matrix M[i, j] = points[j] ** exponents[i] (one row per exponent vector)."""
    points = np.asarray(points)
    exponents = np.asarray(exponents, dtype=np.int64)
    npts, nv = points.shape
    maxdeg = int(exponents.max()) if exponents.size else 0
    # powers[v][d] = x_v ** d across points
    powers = np.stack([np.stack([field.vpow(points[:, v], d) for d in range(maxdeg + 1)]) for v in range(nv)])
    out = np.ones((len(exponents), npts), dtype=field.dtype)
    for v in range(nv):
        out = field.vmul(out, powers[v][exponents[:, v]])
    return out


def variety_mask(eqs, dim: int, field: FieldSpec) -> np.ndarray:
    pts = projective_array(dim, field)
    mask = np.ones(len(pts), dtype=bool)
    for eq in eqs:
        if eq.nvars != dim + 1:
            raise ArityMismatch(f"equation in {eq.nvars} variables for P^{dim}")
        mask &= eq.evaluate_many(pts) == 0
    return mask


def variety_array(eqs, dim: int, field: FieldSpec) -> np.ndarray:
    return projective_array(dim, field)[variety_mask(eqs, dim, field)]


def enumerate_variety(eqs, dim: int, field: FieldSpec) -> list[ProjPoint]:
    """Rational points where every equation vanishes, in canonical order."""
    return [ProjPoint(field, tuple(int(c) for c in row)) for row in variety_array(eqs, dim, field)]
