from __future__ import annotations

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracles
from dlcodes.bundle_codes import (
    CodeSpec,
    RankTwoBundleSpec,
    build_code_2a4_proxy,
    build_code_a2,
    check_hypotheses,
    fiber_monomials,
    symm_decomposition,
)
from dlcodes.dl_surfaces import SurfaceFamily, a2_points
from dlcodes.errors import HypothesisViolation, RankDeficient, UnsupportedTwist
from dlcodes.gf import gf
from dlcodes.linalg import matmul, rank
from dlcodes.mindist import exact_min_distance
from dlcodes.projgeom import projective_array
from dlcodes.rr_spaces import LineBundleA2


def example_spec():
    return CodeSpec(RankTwoBundleSpec.a2(2, 3, (1, 1, 1), 3, (1, 1, 1)), 1)


def oracle_a2_example_rows():
    """Codewords of the example code, rebuilt with galois from the defining conditions."""
    GF = oracles.field(2)
    exps = oracles.monomials(3, 3)
    coord_pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    V = oracles.eval_monomials(GF, coord_pts, exps).T  # conditions f(P) = 0
    sections = V.null_space()
    P1 = [(1, 0), (0, 1), (1, 1)]
    rows = []
    for i1, i2 in ((0, 1), (1, 0)):
        for f in sections:
            row = []
            for pt in a2_points(2):
                base = pt.base.coords
                if base in coord_pts:
                    on_line = [v for v in oracles.projective_points(GF, 2)
                               if v != base and sum(a * b for a, b in zip(v, pt.line.coords)) % 2 == 0]
                    val = oracles.taylor_coeff(GF, f, exps, base, on_line[-1], 1)
                else:
                    val = GF(int(np.sum(f * oracles.eval_monomials(GF, [base], exps)[:, 0])))
                for u in P1:
                    row.append(int(val) * (u[0] ** i1) * (u[1] ** i2))
            rows.append(row)
    return np.array(rows, dtype=np.int64), GF


def test_example_code_shape_and_rank():
    code = build_code_a2(example_spec())
    assert (code.n, code.k) == (63, 14)
    assert rank(code.gen, code.field) == 14
    assert code.column_labels[0] == "([1:0:0],[0:1:0])|[1:0]"
    assert [c["dim"] for c in code.provenance["component_dims"]] == [7, 7]


def test_example_code_row_space_matches_oracle():
    code = build_code_a2(example_spec())
    rows, GF = oracle_a2_example_rows()
    G = GF(code.gen.astype(np.int64))
    O = GF(rows % 2)
    assert np.linalg.matrix_rank(O) == 14
    assert np.linalg.matrix_rank(np.vstack([G, O])) == 14


def test_example_code_has_weight_six_word():
    # X0 X1 X2 in the u0 component: double at the coordinate points, nonzero only at [1:1:1]
    code = build_code_a2(example_spec())
    F = code.field
    word = []
    for pt in a2_points(2):
        val = 1 if pt.base.coords == (1, 1, 1) else 0
        for u in projective_array(1, F):
            word.append(val * int(u[0]))
    word = np.array(word)
    assert word.sum() == 6
    assert rank(np.vstack([code.gen, word.astype(F.dtype)]), F) == 14


def test_fiber_monomials():
    F = gf(4)
    assert list(fiber_monomials(1, 0, F)) == [1, 0, 1, 1, 1]
    assert list(fiber_monomials(0, 0, F)) == [1] * 5


def test_symm_decomposition_order():
    spec = CodeSpec(RankTwoBundleSpec.twisted_2a4(2, 4, 5), 2)
    assert [(i1, i2, d) for i1, i2, d in symm_decomposition(spec)] == [(0, 2, 10), (1, 1, 9), (2, 0, 8)]


def test_hypothesis_and_twist_errors():
    spec = CodeSpec(RankTwoBundleSpec.a2(2, 3, (1, 1, 1), 3, (1, 1, 1)), 3)
    with pytest.raises(HypothesisViolation) as exc:
        build_code_a2(spec)
    assert not exc.value.report.passed
    with pytest.raises(UnsupportedTwist):
        build_code_a2(CodeSpec(example_spec().bundle, 1, a=1))
    bad = check_hypotheses(CodeSpec(RankTwoBundleSpec.twisted_2a4(2, 3, 4), 1))
    assert [c["name"] for c in bad.failures] == ["degree_range"]


def test_constant_sections_are_allowed_with_override():
    spec = CodeSpec(RankTwoBundleSpec.a2(2, 0, (), 0, ()), 1)
    assert not check_hypotheses(spec).passed
    code = build_code_a2(spec, enforce_hypotheses=False)
    assert code.k == 2


def test_rank_deficiency_is_reported():
    # n = 1 with a double point has no sections at all
    spec = CodeSpec(RankTwoBundleSpec.a2(2, 1, (2,), 1, (2,)), 1)
    with pytest.raises(RankDeficient):
        build_code_a2(spec, enforce_hypotheses=False)


def test_proxy_matches_galois_construction():
    spec = CodeSpec(RankTwoBundleSpec.twisted_2a4(2, 4, 4), 2)
    code = build_code_2a4_proxy(spec)
    GF = oracles.gf4()
    Z = oracles.power_sum_points(GF, 5, [3, 9])
    assert len(Z) == code.provenance["z_points"] == 165
    P1 = oracles.projective_points(GF, 1)
    blocks = []
    for i1, i2 in ((0, 2), (1, 1), (2, 0)):
        vals = oracles.eval_monomials(GF, Z, oracles.monomials(5, 8))
        fib = GF([int(GF(u[0]) ** i1 * GF(u[1]) ** i2) for u in P1])
        blocks.append((vals[:, :, None] * fib[None, None, :]).reshape(len(vals), -1))
    oracle_rank = np.linalg.matrix_rank(GF(np.vstack(blocks)))
    assert code.k == code.provenance["achieved_rank"] == oracle_rank
    assert code.provenance["candidate_rows"] == 1485
    assert code.n == 165 * 5 and code.k <= 1107


@st.composite
def small_a2_specs(draw):
    q = 2
    n1 = draw(st.integers(1, 3))
    n2 = draw(st.integers(1, 3))
    m1 = sorted(draw(st.lists(st.integers(0, 1), min_size=3, max_size=3)), reverse=True)
    m2 = sorted(draw(st.lists(st.integers(0, 1), min_size=3, max_size=3)), reverse=True)
    return CodeSpec(RankTwoBundleSpec.a2(q, n1, m1, n2, m2), 1)


@given(small_a2_specs())
@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_singleton_bound_on_constructed_codes(spec):
    try:
        code = build_code_a2(spec, enforce_hypotheses=False)
    except RankDeficient:
        return
    d = exact_min_distance(code).min_weight
    assert d <= code.n - code.k + 1


@given(small_a2_specs())
@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_swapping_summands_gives_equivalent_code(spec):
    try:
        a = build_code_a2(spec, enforce_hypotheses=False)
        b = build_code_a2(CodeSpec(spec.bundle.swapped(), spec.b), enforce_hypotheses=False)
    except RankDeficient:
        return
    da = exact_min_distance(a, distribution=True).distribution
    db = exact_min_distance(b, distribution=True).distribution
    assert da == db


def test_encode_is_linear():
    code = build_code_a2(example_spec())
    F = code.field
    rng = np.random.default_rng(3)
    x, y = rng.integers(0, 2, (2, code.k)).astype(F.dtype)
    assert (code.encode(F.vadd(x, y)) == F.vadd(code.encode(x), code.encode(y))).all()
    assert (code.encode(x) == matmul(x[None, :], code.gen, F)).all()


def test_bundle_spec_validation():
    with pytest.raises(ValueError):
        RankTwoBundleSpec(SurfaceFamily("A2", 2))
    with pytest.raises(ValueError):
        RankTwoBundleSpec(SurfaceFamily("C2", 2), t1=1, t2=1)
    with pytest.raises(ValueError):
        RankTwoBundleSpec(SurfaceFamily("A2", 2), LineBundleA2(1, (0,)), LineBundleA2(1, (0, 0)))
