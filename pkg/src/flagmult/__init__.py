"""Exact computational Lie theory: root systems, weight multiplicities,
tensor decompositions, and nilpotent multiplications on representations,
with the classification machinery for commutative unipotent actions on
generalized flag varieties."""

from .roots import (
    LieType,
    RootDatum,
    ResourceLimitError,
    adjoint_weight,
    build,
    build_type,
    coords_to_labels,
    coroot_coordinates,
    fundamental_weight,
    highest_root,
    inner_product,
    is_root,
    labels_to_coords,
    simple_reflection,
    to_dominant,
    weyl_orbit,
)
from .weights import (
    WeightSystem,
    dual_weight,
    lowest_weight,
    weight_system,
    weyl_dimension,
)
from .tensor import (
    IrrepDecomposition,
    character_product_oracle,
    dual_tensor_adjoint,
    klimyk,
)
from .obstruction import (
    CandidateReport,
    ObstructionReport,
    candidate_gammas,
    find_witness,
    obstruction_report,
    shortroot_candidates,
)
from .matreps import (
    MatrixRep,
    annihilated_by_raising,
    exterior_square_dual,
    gl_adjoint_module,
    in_symmetric_component,
    sl_tautological,
    so_vector,
    sp_tautological,
    tensor_module,
)
from .multiplications import (
    AlgebraSpec,
    CompatibilityReport,
    StructureTensor,
    SubalgebraReport,
    TrilinearForm,
    b_fixed_scan,
    build_a18,
    from_trilinear,
    isotypic_vanishing_check,
    linear_compat_space,
    scaling_action,
    subalgebra_from_mult,
    truncated_power_algebra,
    verify_compatible,
)
from .classify import (
    ClassificationVerdict,
    LeviReport,
    PairDescriptor,
    aut_exceptional,
    classify_pair,
    emit_tables,
    levi_summary,
    radical_commutative,
)

__all__ = [name for name in dir() if not name.startswith("_")]
