"""Exact computation with crossed modules and crossed-module-graded Hopf coalgebras."""

from .errors import (
    AxiomCheckFailedError,
    DefiningIdentityFailedError,
    DivisionByZeroError,
    MissingAntipodeError,
    MixedFieldsError,
    NonComposableError,
    NotAbelianError,
    NotAlgebraAutomorphismError,
    NotBicharacterError,
    NotGrouplikeError,
    NotHomogeneousError,
    NotHomomorphismError,
    NotIntegralError,
    NotInvertibleError,
    NotNormalError,
    NotPivotalError,
    ShapeMismatchError,
    XmhopfError,
)
from .linalg import Field, Matrix, kernel_basis, kron, mat_mul, solve_linear
from .groups import (
    FiniteGroup,
    GroupAction,
    GroupHom,
    conjugation_action,
    cyclic,
    direct_product,
    symmetric,
    validate_action,
    validate_group,
    validate_hom,
)
from .crossed import (
    CrossedModule,
    GroupoidArrow,
    abelian_to_point,
    arrow_antipode,
    arrow_tensor,
    compose,
    hom_set,
    identity_cm,
    inclusion,
    kernel_image_cokernel,
    trivial_over,
    validate_crossed_module,
)
from .hopf import (
    ComponentAlgebra,
    GradedHopfCoalgebra,
    antipode_properties,
    compute_antipode,
    convolution_product,
    enumerate_grouplikes,
    group_algebra,
    grouplike_inverse,
    is_grouplike,
    is_pivotal_element,
    validate_antipode,
    validate_bicoalgebra,
    validate_h_coalgebra,
)
from .xihopf import (
    HopfXiAlgebra,
    HopfXiCoalgebra,
    check_antipode_action_compat,
    dualize,
    dualize_algebra,
    extract_pi_coalgebra,
    full_validation_report,
    grouplike_pairing,
    is_xi_grouplike,
    mk_bicharacter_group_algebra,
    mk_from_h_action,
    mk_from_pi_coalgebra,
    mk_trivial,
    validate_hopf_xi_algebra,
    validate_xi_action,
)
from .repcat import (
    AModule,
    GradedHom,
    compose_homs,
    dual_module,
    dual_zigzag_report,
    e_direct_sum,
    hom_space,
    line_module,
    pullback_phi_e,
    regular_module,
    tensor_homs,
    tensor_modules,
    unit_module,
    validate_module,
)
from .hopfmod import (
    HopfXiModule,
    antipode_transport,
    coinvariants,
    distinguished_grouplike,
    dual_hopf_module,
    integral_space,
    structure_iso,
    trivial_hopf_module,
    validate_hopf_xi_module,
)

__all__ = [name for name in dir() if not name.startswith("_")]
