"""Spin-l irreducible representations of q-deformed su(2).

The deformed algebra is generated by J_z, J_+, J_- with

    [J_z, J_pm] = pm J_pm,      [J_+, J_-] = [2 J_z]_q,

where [x]_q = (q^x - q^(-x)) / (q - q^(-1)) is the symmetric q-number,
evaluated on J_z by functional calculus (J_z is diagonal here).  Only
real q > 0 is supported, which keeps every constructed operator
Hermitian-conjugate consistent.

Ladder matrix elements use the symmetric q-bracket form

    <l, m+1| J_+ |l, m> = sqrt([l - m]_q [l + m + 1]_q),

the unique Hermitian-conjugate pair that reproduces both the defining
commutator and the two-term action of the single-site Hamiltonian
h(q) = q^(J_z/2) (J_+ + J_-) q^(J_z/2); the test suite checks both
rather than assuming them.

Basis order is descending magnetic number m = l, l-1, ..., -l, and spin
labels are stored as the integer 2l so half-integer spins stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .matcore import dagger

# |q - 1| at or below this is treated as the undeformed q = 1 point,
# where q-numbers take their exact limit value [x]_1 = x.
Q_TRIVIAL_TOL = 1e-12

GENERATOR_TAGS = ("jz", "jp", "jm")


@dataclass(frozen=True)
class DeformParam:
    """Deformation parameter q > 0 with the derived alpha = q + 1/q."""

    q: float
    alpha: float = field(init=False)

    def __post_init__(self):
        if not (self.q > 0):
            raise ValueError(f"q must be a positive real, got {self.q}")
        object.__setattr__(self, "alpha", self.q + 1.0 / self.q)

    @property
    def is_trivial(self) -> bool:
        return abs(self.q - 1.0) <= Q_TRIVIAL_TOL


@dataclass(frozen=True)
class SpinLabel:
    """Spin quantum number, stored as the integer 2l."""

    two_l: int

    def __post_init__(self):
        if self.two_l < 0:
            raise ValueError("2l must be a nonnegative integer")

    @property
    def spin(self) -> float:
        return self.two_l / 2.0

    @property
    def dim(self) -> int:
        return self.two_l + 1


@dataclass(frozen=True)
class IrrepMatrices:
    """The generator triple (J_z, J_+, J_-) of one spin-l irrep at fixed q."""

    label: SpinLabel
    q: DeformParam
    jz: np.ndarray
    jp: np.ndarray
    jm: np.ndarray

    @property
    def dim(self) -> int:
        return self.label.dim


def q_number(x, q: float):
    """Symmetric q-number [x]_q = (q^x - q^(-x)) / (q - q^(-1)).

    Returns x itself when q is within Q_TRIVIAL_TOL of 1 (the exact
    limit, not an epsilon-shifted evaluation).  Accepts scalars or
    arrays in x.
    """
    DeformParam(q)  # validates q > 0
    x = np.asarray(x, dtype=float)
    if abs(q - 1.0) <= Q_TRIVIAL_TOL:
        out = x.copy()
    else:
        out = (q**x - q ** (-x)) / (q - 1.0 / q)
    return float(out) if out.ndim == 0 else out


def m_values(label: SpinLabel) -> np.ndarray:
    """Magnetic numbers in basis order: l, l-1, ..., -l."""
    return (label.two_l - 2.0 * np.arange(label.dim)) / 2.0


def build_irrep(two_l: int, q: float) -> IrrepMatrices:
    """Construct the spin-l irrep (l = two_l / 2) at deformation q.

    For two_l == 1 this reduces exactly to J_+ = |up><down|,
    J_- = |down><up|, 2 J_z = sigma_z, independent of q.
    """
    label = SpinLabel(int(two_l))
    param = DeformParam(float(q))
    ms = m_values(label)
    l = label.spin

    jz = np.diag(ms).astype(complex)
    jp = np.zeros((label.dim, label.dim), dtype=complex)
    for col in range(1, label.dim):
        m = ms[col]  # J_+ |l, m> lands on the row above
        jp[col - 1, col] = np.sqrt(
            q_number(l - m, param.q) * q_number(l + m + 1, param.q)
        )
    return IrrepMatrices(label=label, q=param, jz=jz, jp=jp, jm=dagger(jp))


def q_power_jz(rep: IrrepMatrices, a: float) -> np.ndarray:
    """Diagonal q-exponential q^(a J_z) = diag(q^(a m))."""
    return np.diag(rep.q.q ** (a * m_values(rep.label))).astype(complex)


def build_single_h(rep: IrrepMatrices) -> np.ndarray:
    """Single-site Hamiltonian h(q) = q^(J_z/2) (J_+ + J_-) q^(J_z/2).

    Hermitian for q > 0.  On the spin-1/2 irrep all q-dependence cancels
    and h(q) = sigma_x for every q; for l >= 1 the matrix elements pick
    up genuine q-dependence.
    """
    k = q_power_jz(rep, 0.5)
    return k @ (rep.jp + rep.jm) @ k


def antipode(gen: str, rep: IrrepMatrices) -> np.ndarray:
    """Antipode map on a generator: S(J_z) = -J_z, S(J_pm) = -q^(mp 1) J_pm.

    ``gen`` is one of "jz", "jp", "jm".
    """
    if gen == "jz":
        return -rep.jz
    if gen == "jp":
        return -rep.jp / rep.q.q
    if gen == "jm":
        return -rep.q.q * rep.jm
    raise ValueError(f"unknown generator tag {gen!r}, expected one of {GENERATOR_TAGS}")
