"""The four standard Deligne-Lusztig surface families.

A2 is modelled exactly: the surface is P^2 blown up at all of its F_q-points,
so its rational points are the pairs (point, rational line through it).  For
2A4 the point count is closed form and Z = H0 ∩ H1 ⊂ P^4 can be enumerated.
For 2A3 and C2 no closed form is used; the count is brute force #Z(F) times
(q^δ + 1) and is tagged "derived" wherever it is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NonDivisibleCount, UnsupportedFamilyForClosedForm
from .gf import FieldSpec, gf
from .projgeom import HomogPoly, ProjPoint, projective_array, projective_count, variety_array

FAMILIES = ("A2", "2A3", "2A4", "C2")
_DELTA = {"A2": 1, "C2": 1, "2A3": 2, "2A4": 2}
_Z_DIM = {"A2": 2, "2A3": 3, "C2": 3, "2A4": 4}


@dataclass(frozen=True)
class SurfaceFamily:
    tag: str
    q: int

    def __post_init__(self):
        if self.tag not in FAMILIES:
            raise ValueError(f"unknown family {self.tag!r}; expected one of {FAMILIES}")
        gf(self.q)  # validates q as a prime power

    @property
    def delta(self) -> int:
        return _DELTA[self.tag]

    @property
    def field(self) -> FieldSpec:
        """Evaluation field GF(q^δ)."""
        return gf(self.q**self.delta)

    @property
    def z_dim(self) -> int:
        return _Z_DIM[self.tag]

    @property
    def fiber_size(self) -> int:
        """#P^1(F_{q^δ})."""
        return self.q**self.delta + 1

    @property
    def point_divisor(self) -> str:
        """The divisor whose components B_i carry all rational points."""
        return "D2" if self.tag == "2A4" else "D1"

    @property
    def twist_divisor(self) -> str:
        return "D1" if self.tag == "2A4" else "D2"


@dataclass(frozen=True)
class SurfacePointA2:
    """A rational point of the blown-up plane: a base point and a line through it."""

    base: ProjPoint
    line: ProjPoint

    def __post_init__(self):
        f = self.base.field
        s = 0
        for a, b in zip(self.base.coords, self.line.coords):
            s = f.add(s, f.mul(a, b))
        if s:
            raise ValueError(f"{self.base} does not lie on the line {self.line}")

    def __str__(self):
        return f"({self.base},{self.line})"


def z_equations(fam: SurfaceFamily) -> list[HomogPoly]:
    F = fam.field
    q = fam.q
    if fam.tag == "A2":
        return []
    if fam.tag == "2A3":
        return [HomogPoly.power_sum(F, 4, q + 1)]
    if fam.tag == "2A4":
        return [HomogPoly.power_sum(F, 5, q + 1), HomogPoly.power_sum(F, 5, q**3 + 1)]
    # C2: X0^q X3 - X0 X3^q + X1 X2^q - X1^q X2
    minus = F.neg(1)
    terms = {
        (q, 0, 0, 1): 1,
        (1, 0, 0, q): minus,
        (0, 1, q, 0): 1,
        (0, q, 1, 0): minus,
    }
    return [HomogPoly(F, 4, q + 1, terms)]


@lru_cache(maxsize=32)
def _z_points(fam: SurfaceFamily) -> np.ndarray:
    arr = variety_array(z_equations(fam), fam.z_dim, fam.field)
    arr.setflags(write=False)
    return arr


def z_points(fam: SurfaceFamily) -> np.ndarray:
    """Rational points of Z over GF(q^δ) as a code array, canonical order."""
    if fam.tag == "A2":
        return projective_array(2, fam.field)
    return _z_points(fam)


def closed_form_count(fam: SurfaceFamily) -> int | None:
    q = fam.q
    if fam.tag == "A2":
        return (q * q + q + 1) * (q + 1)
    if fam.tag == "2A4":
        return (q**5 + 1) * (q**3 + 1) * (q**2 + 1)
    return None


def count_provenance(fam: SurfaceFamily) -> str:
    return "closed-form" if closed_form_count(fam) is not None else "derived"


def surface_point_count(fam: SurfaceFamily, *, require_closed_form: bool = False) -> int:
    """#S(F_{q^δ}).

    2A3 and C2 fall back to brute force (every Z point blown up into q^δ+1
    points) unless ``require_closed_form`` is set.
    """
    n = closed_form_count(fam)
    if n is not None:
        return n
    if require_closed_form:
        raise UnsupportedFamilyForClosedForm(f"no closed-form point count for {fam.tag}")
    return len(z_points(fam)) * fam.fiber_size


def lines_through(base: ProjPoint) -> list[ProjPoint]:
    """Rational lines (dual vectors) through ``base``, canonical order."""
    F = base.field
    duals = projective_array(2, F)
    b = np.array(base.coords)
    dots = np.zeros(len(duals), dtype=F.dtype)
    for i in range(3):
        dots = F.vadd(dots, F.vmul(duals[:, i], np.full(len(duals), b[i], dtype=F.dtype)))
    return [ProjPoint(F, tuple(int(c) for c in row)) for row in duals[dots == 0]]


def a2_points(q: int, field: FieldSpec | None = None) -> list[SurfacePointA2]:
    """All (P, L) pairs with P in P^2(F_q) and L a rational line through P."""
    field = field or gf(q)
    if field.q != q:
        raise ValueError(f"A2 points live over GF({q}), got {field!r}")
    return list(_a2_points(field))


@lru_cache(maxsize=16)
def _a2_points(field: FieldSpec) -> tuple[SurfacePointA2, ...]:
    out = []
    for row in projective_array(2, field):
        base = ProjPoint(field, tuple(int(c) for c in row))
        for line in lines_through(base):
            out.append(SurfacePointA2(base, line))
    return tuple(out)


@dataclass(frozen=True)
class DivisorData:
    b_component_count: int
    points_per_component: int
    point_divisor: str
    twist_divisor: str
    d1_dot_d2: int | None = None


def divisor_data(fam: SurfaceFamily, d1_dot_d2: int | None = None, point_count: int | None = None) -> DivisorData:
    total = surface_point_count(fam) if point_count is None else point_count
    per = fam.fiber_size
    count, rem = divmod(total, per)
    if rem:
        raise NonDivisibleCount(f"#S = {total} is not a multiple of {per} for {fam.tag}, q={fam.q}")
    return DivisorData(count, per, fam.point_divisor, fam.twist_divisor, d1_dot_d2)


def z_point_count_summary(fam: SurfaceFamily) -> dict:
    """Counts used by reports: ambient, Z, surface, with provenance."""
    return {
        "ambient_points": projective_count(fam.z_dim, fam.field.q),
        "z_points": int(len(z_points(fam))),
        "surface_points": surface_point_count(fam),
        "surface_count_provenance": count_provenance(fam),
    }
