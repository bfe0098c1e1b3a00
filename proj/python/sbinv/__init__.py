"""Exact invariants of surface bundles over surfaces.

Branched-cover constructions of doubly fibered 4-manifolds, exact
signature and Euler-characteristic bookkeeping, permutation-monodromy
covers, and bounds on minimal base genus per unit signature.
"""

from sbinv._core import (
    BoundReport,
    BundleRecord,
    CheckResult,
    ConstructionReport,
    CoverStep,
    Error,
    PermutationCover,
    __version__,
    bfm_upper,
    bounds_table_csv,
    bounds_table_json,
    branch_class_square,
    branched_cover_euler,
    build_simple_genus2,
    build_xgn,
    cover_from_json,
    cross_validate,
    cyclic_cover_spec,
    ekkos_upper,
    euler_from_genus,
    genus_from_euler,
    gf_upper,
    graph_self_intersection,
    hirzebruch_signature,
    kotschick_lower,
    pullback,
    rh_cover_genus,
    signature_quantum,
)

__all__ = [
    "BoundReport",
    "BundleRecord",
    "CheckResult",
    "ConstructionReport",
    "CoverStep",
    "Error",
    "PermutationCover",
    "__version__",
    "bfm_upper",
    "bounds_table_csv",
    "bounds_table_json",
    "branch_class_square",
    "branched_cover_euler",
    "build_simple_genus2",
    "build_xgn",
    "cover_from_json",
    "cross_validate",
    "cyclic_cover_spec",
    "ekkos_upper",
    "euler_from_genus",
    "genus_from_euler",
    "gf_upper",
    "graph_self_intersection",
    "hirzebruch_signature",
    "kotschick_lower",
    "pullback",
    "rh_cover_genus",
    "signature_quantum",
]
