"""Exact computation on simple binary matroids (point sets in PG(n-1,2))."""

from .gf2 import (
    MAX_DIM,
    Flat,
    closure,
    closure_mask,
    complementary_flat,
    coordinate_map,
    cosets,
    empty_flat,
    flats_of_dim,
    full_flat,
    gaussian_binomial,
    ground_mask,
    is_flat,
    is_independent,
    xor_translate,
)
from .matroid import (
    BinaryMatroid,
    BudgetExceeded,
    InvariantRecord,
    canonical_form,
    clique_number,
    complement,
    critical_number,
    find_anticlaw,
    find_claw,
    has_induced_restriction,
    independence_number,
    induced_independence_number,
    invariants,
    is_full_rank,
    is_isomorphic,
    rank,
    restrict,
)
from .construct import (
    bose_burton,
    c4,
    direct_sum,
    doubling,
    empty_matroid,
    full_matroid,
    independent_matroid,
    k4,
    lift_join,
    p5,
    partial_lift_join,
    pg_sum,
    semidoubling,
    target,
    triangle_matroid,
)
from .recognize import (
    ClassFlags,
    chi_bound,
    classify,
    is_anticlaw_free,
    is_bose_burton,
    is_claw_free,
    is_complement_triangle_free,
    is_even_plane,
    is_pg_sum,
    is_pg_sum_direct,
    is_pg_sum_forbidden,
    is_strict_pg_sum,
    is_target,
    is_triangle_free,
)
from .structure import (
    CosetReport,
    Join,
    Leaf,
    PartitionInstance,
    StructureReport,
    StructureTheoremViolation,
    check_coset_confinement,
    check_dim3_odd_singleton_decomposers,
    decompose,
    defect_set,
    find_decomposer,
    has_decomposer,
    has_singleton_decomposer,
    is_decomposer,
    leaves,
    minimal_decomposer_containing,
    reconstruct,
    tree_point_map,
    verify_structure_theorem,
)
from . import census, verify

__version__ = "0.1.0"
