"""q-deformed su(2) coproducts, two-qubit dynamics, and operator entanglement.

The package builds spin-l irreps of the q-deformed su(2) algebra,
composes them on two sites through the Hopf coproduct, evolves the
resulting two-qubit Hamiltonian in closed form, and measures the
operator entanglement and entangling power of the evolution, with every
closed-form result cross-checked against brute-force linear algebra.
"""

from .matcore import (
    CNOT,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    TWO_QUBITS,
    BipartiteDims,
    dagger,
    exp_hermitian,
    frob_dist,
    frob_norm,
    identity,
    kron,
    partial_trace,
    swap_operator,
    trace,
)
from .qsu2 import (
    DeformParam,
    IrrepMatrices,
    SpinLabel,
    antipode,
    build_irrep,
    build_single_h,
    m_values,
    q_number,
    q_power_jz,
)
from .hopf import (
    basis_swap_01_10,
    build_hab_compact,
    build_hab_via_coproduct,
    cocommutativity_defect,
    cocommutativity_defect_at,
    coproduct_jpm,
    coproduct_jz,
    coproduct_q_jz_half,
)
from .dynamics import (
    EvolutionPoint,
    alpha_of,
    cubic_defect,
    evolution_period,
    evolve_closed,
    evolve_explicit,
    evolve_general_l,
    evolve_oracle,
    hab_spectrum,
)
from .entops import (
    choi_reduced_state,
    choi_vector,
    entangling_power,
    ep_monte_carlo,
    haar_product_state,
    maximize_entanglement,
    mixed_invariant,
    op_entanglement_choi,
    op_entanglement_closed,
    op_entanglement_trace,
)

__version__ = "0.1.0"
