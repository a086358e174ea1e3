"""Weight-dependent (dynamical) R-matrices, their classical limits, and
the rank-one fusion/exchange/trace machinery, with exact or
tolerance-controlled verification of every identity involved."""

from .rmatrix import (
    RMatrixFamily,
    assemble,
    basic_rational,
    basic_trigonometric,
    basic_elliptic,
    spectral_trigonometric,
    spectral_rational,
    exchange_closed_form,
)
from .verify import (
    ResidualReport,
    qdybe_residual,
    qdybe_spectral_residual,
    hecke_residual,
    unitarity_residual,
    rll_residual,
)
from .gauge import (
    MultiplicativeTwoForm,
    exact_form_from_potential,
    apply_alpha_twist,
    apply_relabel,
    apply_potential_twist,
    apply_spectral_scale,
    broken_twist,
)
from .liealg import (
    ClassicalFamily,
    classical_rational,
    classical_trigonometric,
    classical_elliptic,
    cdybe_residual,
    cdybe_spectral_residual,
    coupling_constant,
    spectral_coupling,
    classical_limit,
    convergence_order,
)
from .fusion import (
    Module,
    HwParam,
    ResonanceError,
    fusion_matrix,
    abrr_solve,
    fusion_via_intertwiners,
    exchange,
    twist_defect,
    q_operator,
)
from .trace import (
    reduced_trace_series,
    macdonald_coefficients,
    eigen_defect,
    commutator_defect,
    tensor_factorization_defect,
    symmetry_defect,
)

__version__ = "0.1.0"
