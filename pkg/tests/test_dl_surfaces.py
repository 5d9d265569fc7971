from __future__ import annotations

import itertools

import pytest

from conftest import oracle_add, oracle_mul
from dlcodes.dl_surfaces import (
    SurfaceFamily,
    SurfacePointA2,
    a2_points,
    count_provenance,
    divisor_data,
    lines_through,
    surface_point_count,
    z_equations,
    z_points,
)
from dlcodes.errors import UnsupportedFamilyForClosedForm
from dlcodes.gf import gf
from dlcodes.projgeom import ProjPoint, enumerate_projective


def brute_power_sum_count(F, nvars, exponents):
    """#{points of P^(nvars-1)(F) : sum x_i^e = 0 for each e}, by scanning all vectors."""
    powers = {e: [1 if e == 0 else _pw(F, x, e) for x in range(F.q)] for e in exponents}
    hits = 0
    for v in itertools.product(range(F.q), repeat=nvars):
        if not any(v):
            continue
        ok = True
        for e in exponents:
            s = 0
            for x in v:
                s = oracle_add(F, s, powers[e][x])
            ok &= s == 0
        hits += ok
    assert hits % (F.q - 1) == 0
    return hits // (F.q - 1)


def _pw(F, x, e):
    out = 1
    for _ in range(e):
        out = oracle_mul(F, out, x)
    return out


def test_a2_incidence_and_count():
    for q in (2, 3):
        F = gf(q)
        pts = a2_points(q)
        assert len(pts) == surface_point_count(SurfaceFamily("A2", q)) == (q * q + q + 1) * (q + 1)
        for base in enumerate_projective(2, F):
            lines = lines_through(base)
            assert len(lines) == q + 1
            for L in lines:
                dot = 0
                for a, b in zip(base.coords, L.coords):
                    dot = oracle_add(F, dot, oracle_mul(F, a, b))
                assert dot == 0
        assert len(set(pts)) == len(pts)


def test_a2_first_points_are_coordinate_points():
    pts = a2_points(2)
    assert str(pts[0]) == "([1:0:0],[0:1:0])"
    assert [str(P) for P in enumerate_projective(2, gf(2))[:3]] == ["[1:0:0]", "[0:1:0]", "[0:0:1]"]


def test_surface_point_rejects_non_incident_line():
    F = gf(2)
    with pytest.raises(ValueError):
        SurfacePointA2(ProjPoint(F, (1, 0, 0)), ProjPoint(F, (1, 0, 0)))


def test_2a3_hermitian_count():
    fam = SurfaceFamily("2A3", 2)
    brute = brute_power_sum_count(gf(4), 4, [3])
    assert len(z_points(fam)) == brute == 45
    assert surface_point_count(fam) == 45 * 5 == 225
    assert count_provenance(fam) == "derived"
    with pytest.raises(UnsupportedFamilyForClosedForm):
        surface_point_count(fam, require_closed_form=True)


def test_2a4_z_count_matches_brute_force():
    fam = SurfaceFamily("2A4", 2)
    brute = brute_power_sum_count(gf(4), 5, [3, 9])
    assert len(z_points(fam)) == brute
    # x^9 = x^3 on GF(4), so the second equation adds nothing over F_4
    assert brute == brute_power_sum_count(gf(4), 5, [3]) == 165


def test_c2_symplectic_form_vanishes_on_rational_points():
    # x^q = x on F_q makes the form identically zero on P^3(F_q)
    fam = SurfaceFamily("C2", 2)
    assert len(z_points(fam)) == 15
    assert surface_point_count(fam) == 45


@pytest.mark.parametrize("q", [2, 3])
def test_z_equation_degrees(q):
    assert z_equations(SurfaceFamily("A2", q)) == []
    assert [f.degree for f in z_equations(SurfaceFamily("2A3", q))] == [q + 1]
    assert [f.degree for f in z_equations(SurfaceFamily("2A4", q))] == [q + 1, q**3 + 1]
    assert [f.degree for f in z_equations(SurfaceFamily("C2", q))] == [q + 1]


@pytest.mark.parametrize("q", [2, 3])
def test_divisor_division_exact(q):
    a2 = divisor_data(SurfaceFamily("A2", q))
    assert a2.b_component_count == q * q + q + 1
    t = divisor_data(SurfaceFamily("2A4", q))
    assert t.b_component_count * (q * q + 1) == (q**5 + 1) * (q**3 + 1) * (q**2 + 1)
    for tag in ("2A3", "C2"):
        divisor_data(SurfaceFamily(tag, q))


def test_known_counts_q2():
    assert surface_point_count(SurfaceFamily("A2", 2)) == 21
    assert surface_point_count(SurfaceFamily("2A4", 2)) == 1485
    assert divisor_data(SurfaceFamily("2A4", 2)).b_component_count == 297


def test_unknown_family_and_q():
    with pytest.raises(ValueError):
        SurfaceFamily("B2", 2)
    with pytest.raises(ValueError):
        SurfaceFamily("A2", 6)
