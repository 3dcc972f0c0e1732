"""Operator entanglement and entangling power of two-qubit unitaries.

Two fully independent routes to the linear-entropy operator
entanglement E(U) are implemented as first-class citizens:

* ``op_entanglement_choi``: vectorize U into the state
  |U> = (U (x) 1) |Phi+> on the doubled space (A, B, A', B'), reduce to
  the AA' marginal, and take its linear entropy 1 - Tr(sigma^2);
* ``op_entanglement_trace``: the Wang-Zanardi permutation-trace form
  E(U) = 1 - Tr(U^(x2) T13 U^dag(x2) T13) / (dA^2 dB^2).

Their agreement at 1e-10 across random unitaries and the whole evolved
family is the core correctness argument of the package, so neither is a
wrapper of the other.

On top sit the mixed invariant Et(U) = E(U S) (same trace form with T24
on the left), the Wang-Zanardi entangling power

    ep(U) = (4/9) [E(U) + Et(U) - 3/4]        (two qubits),

its measurement by Monte Carlo averaging over Haar-random product
inputs, the closed-form E(u(t)) of the coproduct-evolved family, and a
maximizer of E over one evolution period.
"""

from __future__ import annotations

import numpy as np

from .dynamics import evolution_period, evolve_closed
from .matcore import (
    TWO_QUBITS,
    BipartiteDims,
    frob_norm,
    identity,
    kron,
    partial_trace,
    swap_operator,
)
from .qsu2 import DeformParam

# choi_vector and the measures built on it refuse inputs this far from unitary
UNITARITY_TOL = 1e-8

# uniform draws consumed per product-state sample: 8 doubles = 2 Philox blocks
_DRAWS_PER_SAMPLE = 8
_BLOCKS_PER_SAMPLE = 2

# linear entropy of the swap gate, E(S) = 1 - 1/(dA dB), for two qubits
SWAP_ENTANGLEMENT = 0.75


def _check_unitary(u: np.ndarray, d: int) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.shape != (d, d):
        raise ValueError(f"expected a {d}x{d} matrix, got shape {u.shape}")
    defect = frob_norm(u.conj().T @ u - identity(d))
    if defect > UNITARITY_TOL:
        raise ValueError(f"input is not unitary (defect {defect:.3e})")
    return u


def choi_vector(u: np.ndarray, dims: BipartiteDims = TWO_QUBITS) -> np.ndarray:
    """Normalized state |U> = (U (x) 1) |Phi+> on the doubled space.

    |Phi+> = d^(-1/2) sum_i |i>|i> with d = dA dB; the returned vector
    is indexed by factors in the order (A, B, A', B').
    """
    d = dims.total
    u = _check_unitary(u, d)
    # (U (x) 1)|Phi+> columns: entry (i, j) holds U[i, j] / sqrt(d)
    return (u / np.sqrt(d)).reshape(d * d)


def choi_reduced_state(
    u: np.ndarray, dims: BipartiteDims = TWO_QUBITS
) -> np.ndarray:
    """Marginal of |U><U| on the (A, A') factors."""
    vec = choi_vector(u, dims)
    rho = np.outer(vec, vec.conj())
    return partial_trace(rho, dims.doubled, keep={1, 3})


def op_entanglement_choi(
    u: np.ndarray, dims: BipartiteDims = TWO_QUBITS
) -> float:
    """E(U) as the linear entropy of the reduced Choi state across AA'|BB'."""
    sigma = choi_reduced_state(u, dims)
    return float(np.real(1.0 - np.trace(sigma @ sigma)))


def op_entanglement_trace(
    u: np.ndarray, dims: BipartiteDims = TWO_QUBITS
) -> float:
    """E(U) by the Wang-Zanardi permutation trace, normalized by dA^2 dB^2."""
    d = dims.total
    u = _check_unitary(u, d)
    t13 = swap_operator(dims.doubled, 1, 3)
    uu = kron(u, u)
    val = np.trace(uu @ t13 @ uu.conj().T @ t13) / (d * d)
    return float(np.real(1.0 - val))


def mixed_invariant(u: np.ndarray) -> float:
    """Et(U) = 1 - Tr(U^(x2) T24 U^dag(x2) T13) / 16; equals E(U S) on two qubits."""
    u = _check_unitary(u, 4)
    t13 = swap_operator(TWO_QUBITS.doubled, 1, 3)
    t24 = swap_operator(TWO_QUBITS.doubled, 2, 4)
    uu = kron(u, u)
    val = np.trace(uu @ t24 @ uu.conj().T @ t13) / 16.0
    return float(np.real(1.0 - val))


def entangling_power(u: np.ndarray) -> float:
    """Haar-product-state entangling power ep(U) = (4/9)[E(U) + Et(U) - 3/4]."""
    return (4.0 / 9.0) * (
        op_entanglement_trace(u) + mixed_invariant(u) - SWAP_ENTANGLEMENT
    )


# ---------------------------------------------------------------------------
# closed form along the evolved family
# ---------------------------------------------------------------------------


def _delta_quadratic(q: float, c: float) -> float:
    """Delta(q, c) = ((q^2 - 1)^2 c + 4 q^2)^2, the numerator polynomial of E."""
    q2 = q * q
    return ((q2 - 1.0) ** 2 * c + 4.0 * q2) ** 2


def op_entanglement_closed(q: float, t: float) -> float:
    """Closed-form E(u(t)) = 1/2 - Delta(q, cos(alpha t)) / (2 (q^2 + 1)^4)."""
    param = DeformParam(q)
    c = float(np.cos(param.alpha * t))
    return 0.5 - _delta_quadratic(q, c) / (2.0 * (q * q + 1.0) ** 4)


def _e_max_analytic(q: float) -> float:
    # Test oracle, not public API: minimizing Delta over c in [-1, 1] gives
    # E_max = 1/2 once the vertex c* = -4q^2/(q^2-1)^2 is reachable, i.e.
    # q >= 1 + sqrt(2) (or its inverse, by q <-> 1/q symmetry); otherwise the
    # boundary c = -1 yields Delta = (q^4 - 6 q^2 + 1)^2.
    DeformParam(q)
    lo, hi = np.sqrt(2.0) - 1.0, np.sqrt(2.0) + 1.0
    if q <= lo or q >= hi:
        return 0.5
    return 0.5 - (q**4 - 6.0 * q * q + 1.0) ** 2 / (2.0 * (q * q + 1.0) ** 4)


_COARSE_POINTS = 512
_REFINE_WIDTH = 1e-10
_INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0


def maximize_entanglement(q: float) -> tuple[float, float]:
    """Maximize E(u(t)) over one period [0, 2 pi / alpha].

    Coarse scan on a 512-point grid, then golden-section refinement of
    the bracketing interval down to width 1e-10.  Returns (t_star, E_max).
    """
    period = evolution_period(q)
    ts = np.linspace(0.0, period, _COARSE_POINTS)

    def f(t: float) -> float:
        return op_entanglement_closed(q, t)

    vals = [f(t) for t in ts]
    k = int(np.argmax(vals))
    a = ts[max(k - 1, 0)]
    b = ts[min(k + 1, _COARSE_POINTS - 1)]

    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > _REFINE_WIDTH:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    t_star = 0.5 * (a + b)
    return float(t_star), f(t_star)


# ---------------------------------------------------------------------------
# Haar-random product states and the Monte Carlo entangling power
# ---------------------------------------------------------------------------


def _sample_uniforms(seed: int, start: int, count: int) -> np.ndarray:
    # Counter-based stream: sample i always reads raw Philox outputs
    # [8 i, 8 i + 8), so any block split reproduces the same draws.
    bitgen = np.random.Philox(key=seed)
    bitgen.advance(_BLOCKS_PER_SAMPLE * start)
    return np.random.Generator(bitgen).random((count, _DRAWS_PER_SAMPLE))


def _product_state_block(
    seed: int, start: int, count: int
) -> tuple[np.ndarray, np.ndarray]:
    """Rows of Haar single-qubit state pairs for samples [start, start+count)."""
    u = _sample_uniforms(seed, start, count)
    # Box-Muller with fixed draw count: columns (0,1),(2,3),(4,5),(6,7)
    # each yield one standard complex Gaussian amplitude.
    radius = np.sqrt(-2.0 * np.log1p(-u[:, 0::2]))
    angle = 2.0 * np.pi * u[:, 1::2]
    z = radius * np.cos(angle) + 1j * radius * np.sin(angle)
    psi_a = z[:, :2]
    psi_b = z[:, 2:]
    psi_a = psi_a / np.linalg.norm(psi_a, axis=1, keepdims=True)
    psi_b = psi_b / np.linalg.norm(psi_b, axis=1, keepdims=True)
    return psi_a, psi_b


def haar_product_state(seed: int, index: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Haar-uniform single-qubit pure-state pair for one sample index.

    Each qubit state is two independent standard complex Gaussians,
    normalized.  The draws depend only on (seed, index).
    """
    psi_a, psi_b = _product_state_block(seed, index, 1)
    return psi_a[0], psi_b[0]


def ep_monte_carlo(
    u: np.ndarray, n_samples: int, seed: int
) -> tuple[float, float]:
    """Monte Carlo entangling power: mean output linear entropy over products.

    For each sample the evolved state U |psi_A>|psi_B> is reshaped to a
    2x2 amplitude matrix M, whose linear entropy is 2 |det M|^2.
    Returns (estimate, standard error).  Identical (seed, n_samples)
    give bit-identical results regardless of how the index range is
    blocked, since sample i's randomness depends only on (seed, i).
    """
    if n_samples < 100:
        raise ValueError(f"need at least 100 samples, got {n_samples}")
    u = _check_unitary(u, 4)
    psi_a, psi_b = _product_state_block(seed, 0, n_samples)
    psi = np.einsum("ni,nj->nij", psi_a, psi_b).reshape(n_samples, 4)
    phi = psi @ u.T
    m = phi.reshape(n_samples, 2, 2)
    det = m[:, 0, 0] * m[:, 1, 1] - m[:, 0, 1] * m[:, 1, 0]
    samples = 2.0 * np.abs(det) ** 2
    estimate = float(samples.mean())
    std_error = float(samples.std(ddof=1) / np.sqrt(n_samples))
    return estimate, std_error
