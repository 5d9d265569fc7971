"""Codes on P(V1 ⊕ V2) over the A2 and 2A4 surfaces.

Sections of O_T(b) are sums over i1 + i2 = b of u0^{i1} u1^{i2} g, with g a
section of V1^{i1} ⊗ V2^{i2}.  A codeword coordinate is indexed by a surface
point and a point [u0:u1] of its P^1 fiber.

The 2A4 code built here is a proxy: pulled-back forms are evaluated at the
rational points of Z = H0 ∩ H1 instead of the surface itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any

import numpy as np

from .dl_surfaces import SurfaceFamily, a2_points, surface_point_count, z_points
from .errors import HypothesisViolation, RankDeficient, UnsupportedTwist
from .gf import FieldSpec
from .linalg import matmul, rank, row_basis
from .projgeom import monomial_basis, monomial_values, projective_array
from .rr_spaces import (
    LineBundleA2,
    excellence_hypotheses,
    line_taylor_functionals,
    second_point,
    section_basis,
)


@dataclass(frozen=True)
class RankTwoBundleSpec:
    family: SurfaceFamily
    v1: LineBundleA2 | None = None
    v2: LineBundleA2 | None = None
    t1: int | None = None
    t2: int | None = None

    def __post_init__(self):
        if self.family.tag == "A2":
            if self.v1 is None or self.v2 is None:
                raise ValueError("A2 bundles need two LineBundleA2 summands")
            if len(self.v1.m) != len(self.v2.m):
                raise ValueError("summands must index the same base points")
        elif self.family.tag == "2A4":
            if self.t1 is None or self.t2 is None:
                raise ValueError("2A4 bundles need two twist degrees")
        else:
            raise ValueError(f"split rank-2 bundles are only modelled on A2 and 2A4, not {self.family.tag}")

    @classmethod
    def a2(cls, q: int, n1: int, m1, n2: int, m2) -> "RankTwoBundleSpec":
        return cls(SurfaceFamily("A2", q), LineBundleA2.padded(n1, m1, q), LineBundleA2.padded(n2, m2, q))

    @classmethod
    def twisted_2a4(cls, q: int, t1: int, t2: int) -> "RankTwoBundleSpec":
        return cls(SurfaceFamily("2A4", q), t1=t1, t2=t2)

    def swapped(self) -> "RankTwoBundleSpec":
        return RankTwoBundleSpec(self.family, self.v2, self.v1, self.t2, self.t1)


@dataclass(frozen=True)
class CodeSpec:
    bundle: RankTwoBundleSpec
    b: int
    a: int = 0

    @property
    def family(self) -> SurfaceFamily:
        return self.bundle.family

    @property
    def q(self) -> int:
        return self.bundle.family.q


@dataclass(frozen=True)
class LinearCode:
    field: FieldSpec
    gen: np.ndarray
    column_labels: tuple[str, ...] = ()
    provenance: dict[str, Any] = dc_field(default_factory=dict)

    def __post_init__(self):
        g = np.asarray(self.gen, dtype=self.field.dtype)
        if g.ndim != 2:
            raise ValueError("generator matrix must be 2-D")
        g.setflags(write=False)
        object.__setattr__(self, "gen", g)
        if self.column_labels and len(self.column_labels) != g.shape[1]:
            raise ValueError("one label per column required")
        if len(set(self.column_labels)) != len(self.column_labels):
            raise ValueError("column labels must be distinct")

    @property
    def n(self) -> int:
        return self.gen.shape[1]

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    def encode(self, messages) -> np.ndarray:
        return matmul(np.atleast_2d(messages), self.gen, self.field)

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over {self.field.descriptor})"


def symm_decomposition(spec: CodeSpec) -> list[tuple[int, int, Any]]:
    """Components V1^{i1} ⊗ V2^{i2} of Symm^b, (i1, i2) lexicographic.

    A2 descriptors are LineBundleA2 values; 2A4 descriptors are the degree
    i1 t1 + i2 t2.
    """
    if spec.b < 0:
        raise ValueError("b must be non-negative")
    bundle = spec.bundle
    out = []
    for i1 in range(spec.b + 1):
        i2 = spec.b - i1
        if bundle.family.tag == "A2":
            out.append((i1, i2, bundle.v1.combine(bundle.v2, i1, i2)))
        else:
            out.append((i1, i2, i1 * bundle.t1 + i2 * bundle.t2))
    return out


@dataclass
class HypothesisReport:
    family: str
    checks: list[dict[str, Any]]

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    @property
    def failures(self) -> list[dict[str, Any]]:
        return [c for c in self.checks if not c["passed"]]

    def to_json(self) -> list[dict[str, Any]]:
        return [dict(c) for c in self.checks]


def check_hypotheses(spec: CodeSpec) -> HypothesisReport:
    q, b = spec.q, spec.b
    fam = spec.family
    checks: list[dict[str, Any]] = []
    if fam.tag == "A2":
        checks.append({"name": "b_range", "component": None, "detail": f"0 < {b} < {q + 1}", "passed": 0 < b < q + 1})
        for i1, i2, comb_bundle in symm_decomposition(spec):
            res = excellence_hypotheses(comb_bundle, q)
            n, m = comb_bundle.n, comb_bundle.m
            details = {
                "degree_cap": f"{n} <= {3 * (q - 1)}",
                "three_largest": f"{n} >= {sum(m[:3])}",
                "non_increasing": "multiplicities non-increasing",
                "anticanonical_positive": f"{3 * n} > {sum(m)}",
            }
            for name, ok in res.items():
                checks.append({"name": name, "component": f"{i1},{i2}", "detail": details[name], "passed": ok})
    elif fam.tag == "2A4":
        checks.append({"name": "b_range", "component": None, "detail": f"0 < {b} < {q * q + 1}", "passed": 0 < b < q * q + 1})
        for i1, i2, deg in symm_decomposition(spec):
            ok = q + 1 < deg < q**3 + 1
            checks.append(
                {"name": "degree_range", "component": f"{i1},{i2}", "detail": f"{q + 1} < {deg} < {q**3 + 1}", "passed": ok}
            )
    else:
        raise ValueError(f"no hypothesis checks for family {fam.tag}")
    return HypothesisReport(fam.tag, checks)


def _require(spec: CodeSpec, enforce: bool):
    if spec.a != 0:
        raise UnsupportedTwist("codes with a > 0 (twist by D_j) have no section-space model")
    rep = check_hypotheses(spec)
    if enforce and not rep.passed:
        names = ", ".join(f"{c['name']}({c['component'] or 'all'})" for c in rep.failures)
        raise HypothesisViolation(f"hypotheses fail: {names}", rep)
    return rep


def fiber_monomials(i1: int, i2: int, field: FieldSpec) -> np.ndarray:
    """u0^{i1} u1^{i2} at each point of P^1(field), canonical order."""
    P1 = projective_array(1, field)
    return field.vmul(field.vpow(P1[:, 0], i1), field.vpow(P1[:, 1], i2))


def a2_evaluation_matrix(bundle: LineBundleA2, field: FieldSpec) -> np.ndarray:
    """E[e, s]: fiber value of the monomial X^e at surface point s (before the section basis)."""
    points = a2_points(field.q, field)
    base_index = {tuple(int(c) for c in row): j for j, row in enumerate(projective_array(2, field))}
    nmon = len(monomial_basis(3, bundle.n))
    E = np.zeros((nmon, len(points)), dtype=field.dtype)
    for s, pt in enumerate(points):
        mult = bundle.m[base_index[pt.base.coords]]
        Q = second_point(pt.base, pt.line)
        T = line_taylor_functionals(pt.base.coords, Q, bundle.n, mult, field)
        E[:, s] = T[mult]
    return E


def build_code_a2(spec: CodeSpec, field: FieldSpec | None = None, *, enforce_hypotheses: bool = True) -> LinearCode:
    fam = spec.family
    if fam.tag != "A2":
        raise ValueError("build_code_a2 needs an A2 spec")
    field = field or fam.field
    rep = _require(spec, enforce_hypotheses)
    points = a2_points(fam.q, field)
    P1 = projective_array(1, field)
    rows = []
    component_dims = []
    for i1, i2, comb_bundle in symm_decomposition(spec):
        comb_bundle.check_length(fam.q)
        basis = section_basis(comb_bundle, field)
        component_dims.append({"component": f"{i1},{i2}", "dim": basis.dim})
        if basis.dim == 0:
            continue
        E = a2_evaluation_matrix(comb_bundle, field)
        surf_vals = matmul(basis.coeffs, E, field)  # (dim, #S)
        fib = fiber_monomials(i1, i2, field)  # (q+1,)
        block = field.vmul(surf_vals[:, :, None], fib[None, None, :]).reshape(basis.dim, -1)
        rows.append(block)
    labels = tuple(f"{pt}|[{':'.join(field.encode(int(c)) for c in u)}]" for pt in points for u in P1)
    n_cols = len(points) * len(P1)
    gen = np.vstack(rows) if rows else np.zeros((0, n_cols), dtype=field.dtype)
    r = rank(gen, field) if gen.size else 0
    if r == 0 or r < gen.shape[0]:
        raise RankDeficient(
            f"evaluation map not injective: rank {r} from {gen.shape[0]} section rows", rank=r, rows=gen.shape[0]
        )
    prov = {
        "construction": "A2 blow-up, exact",
        "family": "A2",
        "q": fam.q,
        "b": spec.b,
        "multiplicities": [list(spec.bundle.v1.m), list(spec.bundle.v2.m)],
        "degrees": [spec.bundle.v1.n, spec.bundle.v2.n],
        "component_dims": component_dims,
        "hypotheses_passed": rep.passed,
        "surface_points": len(points),
    }
    return LinearCode(field, gen, labels, prov)


def build_code_2a4_proxy(spec: CodeSpec, field: FieldSpec | None = None, *, enforce_hypotheses: bool = True) -> LinearCode:
    """Proxy code on Z(F_{q^2}) × P^1(F_{q^2}); rows reduced to a basis."""
    fam = spec.family
    if fam.tag != "2A4":
        raise ValueError("build_code_2a4_proxy needs a 2A4 spec")
    field = field or fam.field
    _require(spec, enforce_hypotheses)
    Z = z_points(fam)
    P1 = projective_array(1, field)
    blocks = []
    for i1, i2, deg in symm_decomposition(spec):
        monos = monomial_basis(5, deg)
        vals = monomial_values(Z, monos, field)  # (#mon, #Z)
        fib = fiber_monomials(i1, i2, field)
        blocks.append(field.vmul(vals[:, :, None], fib[None, None, :]).reshape(len(monos), -1))
    candidates = np.vstack(blocks)
    gen = row_basis(candidates, field)
    labels = tuple(
        "[" + ":".join(field.encode(int(c)) for c in z) + "]|[" + ":".join(field.encode(int(c)) for c in u) + "]"
        for z in Z
        for u in P1
    )
    prov = {
        "construction": "proxy: evaluated on Z, not on S2",
        "proxy": True,
        "family": "2A4",
        "q": fam.q,
        "b": spec.b,
        "t": [spec.bundle.t1, spec.bundle.t2],
        "candidate_rows": int(candidates.shape[0]),
        "achieved_rank": int(gen.shape[0]),
        "z_points": int(len(Z)),
        "surface_points": surface_point_count(fam),
    }
    return LinearCode(field, gen, labels, prov)
