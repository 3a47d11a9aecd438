"""Group codes over finite fields: constructions, divisibility checks,
and machine-checkable abelian/cyclic witnesses."""

from .certify import (
    Witness,
    abelianize_code,
    certify_divisibility,
    certify_group_code,
    certify_left_group_code,
    coset_rep_sum_code,
    cyclicize_code,
    hall_cocyclic_to_cyclic,
    rep_sum_embedding,
    replay,
    transfer_ideal,
    trivial_action_to_abelian_witness,
)
from .codes import (
    CoordBijection,
    LinearCode,
    algebra_to_code,
    apply_perm,
    code_from_rows,
    code_to_algebra,
    dual_code,
    is_divisible,
    min_weight,
    paut_contains,
    paut_enumerate,
    perm_equivalent,
    read_code_file,
    write_code_file,
)
from .constructions import (
    BlockIndex,
    PAutDecomposition,
    build_A5,
    build_cyclic,
    build_dihedral,
    build_Gpqm,
    decompose_paut_element,
    direct_product,
    parse_group_spec,
    prescribed_commutator_group,
    rep_code,
    rep_sum_code,
    rep_sum_paut_generators,
)
from .errors import CapError, GroupCodesError, VerificationFailure
from .ffield import FieldElem, FieldSpec, format_field_spec, parse_field_spec
from .galg import (
    GAElem,
    IdealBasis,
    acts_trivially,
    coset_constancy_profile,
    ga_mul_elem,
    ideal_generated,
    is_ideal,
    subgroup_sum,
)
from .kernels import BACKEND
from .perms import (
    CayleyTable,
    Perm,
    PermGroup,
    center,
    centralizer_anti_isomorphism,
    centralizer_in_symmetric,
    derived_subgroup,
    find_coprime_cyclic_decomposition,
    find_isomorphism,
    group_closure,
    is_hall_cocyclic,
    is_regular,
    quotient,
    read_group_file,
    regular_representation,
    write_group_file,
)

__version__ = "0.1.0"
