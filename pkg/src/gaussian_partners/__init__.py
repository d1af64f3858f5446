"""Partners of modes in bosonic Gaussian states.

Locate the degrees of freedom that carry the correlations (and the
entanglement) of a chosen subsystem, using the complex structure
J = -Omega sigma and symplectic projectors on the complexified phase space.
"""

from .entanglement import (
    PTSpectrum,
    entanglement_partner,
    is_non_ppt,
    log_negativity,
    momentum_flip,
    partial_transpose,
    pt_spectrum,
    subunity_count_check,
)
from .errors import GaussianPartnersError
from .fermionic import (
    FermionicState,
    fermionic_complex_structure,
    fermionic_partner,
    fermionic_subspace,
    random_fermionic_state,
)
from .gaussian_state import (
    ComplexStructure,
    GaussianState,
    SymplecticSpectrum,
    complex_structure,
    covariance_of,
    purity,
    random_state,
    state_from_spectrum,
    symplectic_spectrum,
    thermal,
    two_mode_squeezed,
    vacuum,
    validate_state,
    wigner_density,
)
from .partners import PartnerResult, correlation_partner, eigenspace_projectors, pure_partner
from .phase_space import annihilation_basis, conjugate, symplectic_form, symplectic_product
from .subsystems import (
    ModeSubspace,
    correlation_block,
    direct_sum,
    gram_matrix,
    is_uncorrelated,
    projector_distance,
    reduce_state,
    restrict,
    symplectic_complement,
    symplectic_gram_schmidt,
    symplectic_projector,
)

__version__ = "0.1.0"
