"""Closed-form two-qubit time evolution and its numerical oracle.

The compact two-qubit Hamiltonian h_ab(q) satisfies the cubic identity
h^3 = alpha^2 h with alpha = q + 1/q and spectrum {0, 0, +-alpha}, so
exp(-i t h) collapses to a degree-two polynomial:

    u(t) = 1 - i (sin(alpha t) / alpha) h + ((cos(alpha t) - 1) / alpha^2) h^2

Three independent expressions of u(t) are provided and cross-checked in
the test suite: the polynomial above (``evolve_closed``), the explicit
4x4 matrix (``evolve_explicit``), and the eigendecomposition exponential
(``evolve_oracle``).  General spin-l composite evolution has no
polynomial shortcut and is handled numerically only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hopf import build_hab_compact, build_hab_via_coproduct
from .matcore import exp_hermitian, frob_norm, identity
from .qsu2 import DeformParam, IrrepMatrices


@dataclass(frozen=True)
class EvolutionPoint:
    """One evolved point: parameters, c = cos(alpha t), s = sin(alpha t), and u(t)."""

    q: float
    t: float
    c: float
    s: float
    u: np.ndarray


def alpha_of(q: float) -> float:
    """The spectral scale alpha = q + 1/q."""
    return DeformParam(q).alpha


def evolution_period(q: float) -> float:
    """Period 2 pi / alpha of u(t); the spectrum {0, +-alpha} makes it exact."""
    return 2.0 * np.pi / alpha_of(q)


def cubic_defect(q: float) -> float:
    """||h^3 - alpha^2 h||_F for the compact two-qubit Hamiltonian."""
    h = build_hab_compact(q)
    return frob_norm(h @ h @ h - alpha_of(q) ** 2 * h)


def hab_spectrum(q: float) -> np.ndarray:
    """Sorted eigenvalues of h_ab(q); expected multiset {-alpha, 0, 0, alpha}."""
    return np.linalg.eigvalsh(build_hab_compact(q))


def evolve_closed(q: float, t: float) -> EvolutionPoint:
    """u(t) via the degree-two polynomial in h_ab(q)."""
    h = build_hab_compact(q)
    a = alpha_of(q)
    c = float(np.cos(a * t))
    s = float(np.sin(a * t))
    u = identity(4) - 1j * (s / a) * h + ((c - 1.0) / a**2) * (h @ h)
    return EvolutionPoint(q=float(q), t=float(t), c=c, s=s, u=u)


def evolve_explicit(q: float, t: float) -> np.ndarray:
    """u(t) from the explicit 4x4 matrix, prefactor 1 / (q^2 + 1)."""
    DeformParam(q)
    a = alpha_of(q)
    c = np.cos(a * t)
    s = np.sin(a * t)
    q2 = q * q
    return np.array(
        [
            [1 + q2 * c, -1j * q2 * s, -1j * q * s, q * (c - 1)],
            [-1j * q2 * s, 1 + q2 * c, q * (c - 1), -1j * q * s],
            [-1j * q * s, q * (c - 1), q2 + c, -1j * s],
            [q * (c - 1), -1j * q * s, -1j * s, q2 + c],
        ],
        dtype=complex,
    ) / (q2 + 1)


def evolve_oracle(q: float, t: float) -> np.ndarray:
    """u(t) by Hermitian eigendecomposition, independent of the closed form."""
    return exp_hermitian(build_hab_compact(q), -1j * t)


def evolve_general_l(rep: IrrepMatrices, t: float) -> np.ndarray:
    """Numerically exact evolution under the coproduct-built spin-l Hamiltonian."""
    return exp_hermitian(build_hab_via_coproduct(rep), -1j * t)
