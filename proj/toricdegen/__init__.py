"""Irrational toric varieties: regular subdivisions, secondary polytopes,
moment-map inversion, and Hausdorff-limit degeneration experiments."""

from ._toricdegen import (
    BirchResult,
    Cone,
    DegenerationReport,
    Fan,
    FanPoint,
    PointConfig,
    SecondaryFanPoint,
    Subdivision,
    SuiteResult,
    Tolerance,
    TriangulationList,
    birch_inverse,
    degenerate,
    distinguished_point,
    enumerate_regular_triangulations,
    epsilon,
    gkz_vertex,
    hausdorff_distance,
    is_member,
    is_triangulation,
    moment,
    monoid_mul,
    one_param_limit,
    phi,
    ray_sequence_limit,
    regular_subdivision,
    run_suite,
    same_secondary_cone,
    secondary_ray_limit,
    suite_names,
)

__all__ = [
    "BirchResult",
    "Cone",
    "DegenerationReport",
    "Fan",
    "FanPoint",
    "PointConfig",
    "SecondaryFanPoint",
    "Subdivision",
    "SuiteResult",
    "Tolerance",
    "TriangulationList",
    "birch_inverse",
    "degenerate",
    "distinguished_point",
    "enumerate_regular_triangulations",
    "epsilon",
    "gkz_vertex",
    "hausdorff_distance",
    "is_member",
    "is_triangulation",
    "moment",
    "monoid_mul",
    "one_param_limit",
    "phi",
    "ray_sequence_limit",
    "regular_subdivision",
    "run_suite",
    "same_secondary_cone",
    "secondary_ray_limit",
    "suite_names",
]
