"""Dense complex matrix kernel.

Operators and states are plain numpy arrays (complex128, row-major).
This module provides the small set of primitives everything else is
built on: Kronecker products, partial traces, factor-swap permutation
operators, and a Hermitian matrix exponential used as the independent
oracle for all closed-form time evolutions.

Conventions fixed here and used throughout the package:

* the left Kronecker factor is subsystem A, so the two-qubit basis is
  ordered |00>, |01>, |10>, |11>;
* in the doubled (operator) space the factor order is (A, B, A', B')
  and factors are numbered 1..4, so e.g. ``swap_operator(dims, 1, 3)``
  exchanges A with A'.

All functions are pure; nothing here mutates its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Default absolute comparison tolerance (Frobenius norm).
DEFAULT_TOL = 1e-10
# Inputs to Hermitian-only operations must satisfy ||M - M^dag||_F <= this.
HERMITICITY_TOL = 1e-10

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)


@dataclass(frozen=True)
class BipartiteDims:
    """Subsystem dimensions (dA, dB) of a bipartite space.

    Factor order is (A, B) with A the left Kronecker factor; the doubled
    space used for operator-entanglement computations is ordered
    (A, B, A', B') = (1, 2, 3, 4).
    """

    da: int
    db: int

    def __post_init__(self):
        if self.da < 1 or self.db < 1:
            raise ValueError("subsystem dimensions must be positive")

    @property
    def total(self) -> int:
        return self.da * self.db

    @property
    def doubled(self) -> list[int]:
        """Factor dimensions of the doubled space, order (A, B, A', B')."""
        return [self.da, self.db, self.da, self.db]


TWO_QUBITS = BipartiteDims(2, 2)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=complex)


def kron(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Kronecker product with the left argument as the slow (outer) index."""
    return np.kron(np.asarray(x, dtype=complex), np.asarray(y, dtype=complex))


def dagger(x: np.ndarray) -> np.ndarray:
    return np.asarray(x).conj().T


def trace(x: np.ndarray) -> complex:
    x = np.asarray(x)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ValueError(f"trace requires a square matrix, got shape {x.shape}")
    return complex(np.trace(x))


def frob_norm(x: np.ndarray) -> float:
    return float(np.linalg.norm(np.asarray(x)))


def frob_dist(x: np.ndarray, y: np.ndarray) -> float:
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != y.shape:
        raise ValueError(f"shape mismatch: {x.shape} vs {y.shape}")
    return float(np.linalg.norm(x - y))


def hermiticity_defect(x: np.ndarray) -> float:
    """||X - X^dag||_F, zero iff X is Hermitian."""
    return frob_dist(x, dagger(x))


def partial_trace(rho, dims, keep) -> np.ndarray:
    """Trace out all factors not listed in ``keep``.

    Parameters
    ----------
    rho : square matrix on the tensor product of the given factors.
    dims : factor dimensions, slow index first.
    keep : factor labels to keep, numbered from 1 (matching the
        (A, B, A', B') = (1, 2, 3, 4) convention).  An empty set traces
        everything and returns the trace as a 1x1 matrix.

    The kept factors appear in the output in their original order.
    """
    rho = np.asarray(rho, dtype=complex)
    dims = [int(d) for d in dims]
    n = len(dims)
    total = int(np.prod(dims))
    if rho.shape != (total, total):
        raise ValueError(
            f"matrix shape {rho.shape} does not match factor dims {dims}"
        )
    keep = sorted(set(int(k) for k in keep))
    if any(k < 1 or k > n for k in keep):
        raise ValueError(f"keep labels must lie in 1..{n}, got {keep}")

    traced = [k for k in range(n) if (k + 1) not in keep]
    work = rho.reshape(dims + dims)
    left = list(dims)
    for idx in sorted(traced, reverse=True):
        work = np.trace(work, axis1=idx, axis2=idx + len(left))
        del left[idx]
    d_out = int(np.prod(left)) if left else 1
    return np.asarray(work, dtype=complex).reshape(d_out, d_out)


def swap_operator(dims, i: int, j: int) -> np.ndarray:
    """Permutation operator exchanging factors i and j (1-based labels).

    The result is a real, symmetric, involutory 0/1 matrix.  Requires
    dims[i] == dims[j].
    """
    dims = [int(d) for d in dims]
    n = len(dims)
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"factor labels must lie in 1..{n}, got ({i}, {j})")
    if dims[i - 1] != dims[j - 1]:
        raise ValueError(
            f"cannot swap factors of unequal dimension "
            f"{dims[i - 1]} and {dims[j - 1]}"
        )
    total = int(np.prod(dims))
    # target[x] = flat index of x with components i, j exchanged
    target = np.swapaxes(np.arange(total).reshape(dims), i - 1, j - 1).ravel()
    op = np.zeros((total, total), dtype=complex)
    op[target, np.arange(total)] = 1.0
    return op


def exp_hermitian(h: np.ndarray, scale: complex) -> np.ndarray:
    """exp(scale * H) for Hermitian H, via eigendecomposition.

    Computes V exp(scale * lambda) V^dag.  For purely imaginary scale
    the result is unitary up to eigensolver accuracy.  Raises on inputs
    with Hermiticity defect above ``HERMITICITY_TOL``.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    defect = hermiticity_defect(h)
    if defect > HERMITICITY_TOL:
        raise ValueError(
            f"matrix is not Hermitian (defect {defect:.3e} > {HERMITICITY_TOL:.0e})"
        )
    w, v = np.linalg.eigh(h)
    return (v * np.exp(scale * w)) @ v.conj().T
