"""Coproduct maps and coproduct-built two-site operators.

The coproduct prescribes how one-site generators act on two sites:

    delta(J_pm) = J_pm (x) q^(J_z) + q^(-J_z) (x) J_pm
    delta(J_z)  = J_z (x) 1 + 1 (x) J_z
    delta(q^(J_z/2)) = q^(J_z/2) (x) q^(J_z/2)          (group-like)

For q != 1 the ladder coproduct is not symmetric under exchange of the
two factors (non-cocommutative); ``cocommutativity_defect`` measures
that asymmetry.  The two-site Hamiltonian is built either by applying
the coproduct to the single-site h(q), or (spin-1/2 only) in the
compact form sigma_x (x) 1 + q^(2 J_z) (x) sigma_x; the two agree after
exchanging the middle basis vectors |01> <-> |10>.
"""

from __future__ import annotations

import numpy as np

from .matcore import SIGMA_X, frob_dist, identity, kron, swap_operator
from .qsu2 import DeformParam, IrrepMatrices, build_irrep, q_power_jz


def coproduct_jpm(rep: IrrepMatrices, sign: int = +1) -> np.ndarray:
    """Two-site ladder generator delta(J_pm); sign +1 for J_+, -1 for J_-."""
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    j = rep.jp if sign > 0 else rep.jm
    return kron(j, q_power_jz(rep, 1.0)) + kron(q_power_jz(rep, -1.0), j)


def coproduct_jz(rep: IrrepMatrices) -> np.ndarray:
    """Two-site delta(J_z) = J_z (x) 1 + 1 (x) J_z (Leibniz, cocommutative)."""
    eye = identity(rep.dim)
    return kron(rep.jz, eye) + kron(eye, rep.jz)


def coproduct_q_jz_half(rep: IrrepMatrices) -> np.ndarray:
    """Group-like delta(q^(J_z/2)) = q^(J_z/2) (x) q^(J_z/2)."""
    k = q_power_jz(rep, 0.5)
    return kron(k, k)


def build_hab_via_coproduct(rep: IrrepMatrices) -> np.ndarray:
    """Two-site Hamiltonian delta(h) = delta(q^(J_z/2)) delta(J_+ + J_-) delta(q^(J_z/2))."""
    dk = coproduct_q_jz_half(rep)
    return dk @ (coproduct_jpm(rep, +1) + coproduct_jpm(rep, -1)) @ dk


def build_hab_compact(q: float) -> np.ndarray:
    """Compact spin-1/2 two-qubit Hamiltonian sigma_x (x) 1 + q^(2 J_z) (x) sigma_x.

    Explicitly, in the basis |00>, |01>, |10>, |11>:

        [[0, q,   1,   0  ],
         [q, 0,   0,   1  ],
         [1, 0,   0,   1/q],
         [0, 1,   1/q, 0  ]]
    """
    DeformParam(q)
    q2jz = np.diag([q, 1.0 / q]).astype(complex)
    return kron(SIGMA_X, identity(2)) + kron(q2jz, SIGMA_X)


def basis_swap_01_10() -> np.ndarray:
    """Permutation matrix exchanging the basis vectors |01> and |10>."""
    p = identity(4)
    return p[:, [0, 2, 1, 3]]


def cocommutativity_defect(rep: IrrepMatrices) -> float:
    """Frobenius distance between delta(J_+) and its factor-flipped image.

    Zero iff q = 1; the flip map is conjugation by the two-site SWAP.
    """
    djp = coproduct_jpm(rep, +1)
    s = swap_operator([rep.dim, rep.dim], 1, 2)
    return frob_dist(djp, s @ djp @ s)


def cocommutativity_defect_at(q: float, two_l: int = 1) -> float:
    """Convenience wrapper building the irrep internally."""
    return cocommutativity_defect(build_irrep(two_l, q))
