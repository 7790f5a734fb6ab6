"""Finite multiple zeta values: numerics and relation discovery.

Mod-p multiple harmonic sums over trees of compositions, bounded additive
relation search by (dynamic) meet-in-the-middle, and a Chinese-remainder
pipeline that combines both to find integer linear relations among the
weight-w values.  The hot DP kernel is a compiled extension with a
pure-Python fallback selected at import (see fmzv.kernel_backend).
"""

from ._kernels import HAVE_COMPILED, backend_name as kernel_backend
from .dynamic_mitm import minimal_generating_system, scan_cost
from .harmonic import (
    HarmonicTable,
    ResidueVector,
    mhs_horizontal,
    mhs_naive,
    mhs_vertical,
    multi_prime_mhs,
    residues_for_indices,
    tree_mhs,
)
from .indices import (
    Index,
    IndexTree,
    bounded_weight_tree,
    compositions,
    depth_sum,
    parse_index,
    prefix_tree,
    tree_from_indices,
)
from .mitm import (
    CoefficientArray,
    MitmDictionary,
    RelationSolution,
    ZmodN,
    generates_over,
    mitm_decipher,
    solve_bounded_relation,
)
from .modarith import (
    InverseTable,
    ModResidue,
    Modulus,
    NotCoprime,
    Prime,
    Residue,
    ZeroInverse,
    build_inverse_table,
    garner,
    inv_euclid,
    inv_pow,
    is_prime,
)
from .pipeline import (
    ConfigError,
    GuardReport,
    PipelineConfig,
    PipelineResult,
    RelationRecord,
    WeightMismatch,
    expected_dimension,
    keyed_scan_cost,
    parse_config_text,
    run_pipeline,
    vanishing_guard,
    verify_records,
    verify_relation,
)
from .tableio import (
    DISCOVERY_PRIMES_W10,
    RelationTable,
    load_builtin,
    read_table,
    resolve_table,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientArray",
    "ConfigError",
    "DISCOVERY_PRIMES_W10",
    "GuardReport",
    "HAVE_COMPILED",
    "HarmonicTable",
    "Index",
    "IndexTree",
    "InverseTable",
    "MitmDictionary",
    "ModResidue",
    "Modulus",
    "NotCoprime",
    "PipelineConfig",
    "PipelineResult",
    "Prime",
    "RelationRecord",
    "RelationSolution",
    "RelationTable",
    "Residue",
    "ResidueVector",
    "WeightMismatch",
    "ZeroInverse",
    "ZmodN",
    "bounded_weight_tree",
    "build_inverse_table",
    "compositions",
    "depth_sum",
    "expected_dimension",
    "garner",
    "generates_over",
    "inv_euclid",
    "inv_pow",
    "is_prime",
    "kernel_backend",
    "keyed_scan_cost",
    "load_builtin",
    "mhs_horizontal",
    "mhs_naive",
    "mhs_vertical",
    "minimal_generating_system",
    "mitm_decipher",
    "multi_prime_mhs",
    "parse_config_text",
    "parse_index",
    "prefix_tree",
    "read_table",
    "residues_for_indices",
    "resolve_table",
    "run_pipeline",
    "scan_cost",
    "solve_bounded_relation",
    "tree_from_indices",
    "tree_mhs",
    "vanishing_guard",
    "verify_records",
    "verify_relation",
]
