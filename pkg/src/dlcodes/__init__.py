"""Evaluation codes on rank-2 projective bundles over Deligne-Lusztig surfaces."""

from __future__ import annotations

from .bundle_codes import CodeSpec, LinearCode, RankTwoBundleSpec, build_code_2a4_proxy, build_code_a2
from .dl_surfaces import SurfaceFamily, surface_point_count
from .errors import DLCodesError
from .gf import FieldSpec, field_create, gf, parse_field
from .mindist import exact_min_distance, sampled_min_weight, verify_bound
from .params import BoundInputs, corollary_2a4_params, corollary_a2_params, general_bound
from .rr_spaces import LineBundleA2

__version__ = "0.1.0"

__all__ = [
    "BoundInputs",
    "CodeSpec",
    "DLCodesError",
    "FieldSpec",
    "LineBundleA2",
    "LinearCode",
    "RankTwoBundleSpec",
    "SurfaceFamily",
    "build_code_2a4_proxy",
    "build_code_a2",
    "corollary_2a4_params",
    "corollary_a2_params",
    "exact_min_distance",
    "field_create",
    "general_bound",
    "gf",
    "parse_field",
    "sampled_min_weight",
    "surface_point_count",
    "verify_bound",
]
