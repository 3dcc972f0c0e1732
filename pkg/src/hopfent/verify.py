"""Self-contained verification suite behind the ``verify`` CLI command.

Every invariant of the package is re-derived here by brute force and
reported as a named check with its worst observed deviation.  Float
checks pass when the deviation stays below min(spec bound, requested
tolerance); the Monte Carlo check is statistical and uses a z-score
bound of 4 instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain

import numpy as np

from . import dynamics, entops, hopf, matcore, qsu2

GRID_Q = (0.5, 1.0, 1.5, 2.0, 3.0, 5.0)
GRID_T_POINTS = 200

MC_SAMPLES = 100_000
MC_SEED = 42
MC_Z_BOUND = 4.0


@dataclass(frozen=True)
class CheckResult:
    name: str
    deviation: float
    bound: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.bound


def _check(name: str, deviation: float, spec_bound: float, tol: float) -> CheckResult:
    return CheckResult(name, float(deviation), min(spec_bound, tol))


def _haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    # Ginibre + QR with the standard phase fix gives Haar measure.
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def _t_grid(q: float) -> np.ndarray:
    return np.linspace(0.0, 4.0 * np.pi / dynamics.alpha_of(q), GRID_T_POINTS)


def check_matrix_kernel(tol: float) -> list[CheckResult]:
    rng = np.random.Generator(np.random.Philox(key=1))

    dims = [2, 3, 2]
    d = int(np.prod(dims))
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    rho = z @ z.conj().T
    rho /= np.trace(rho)
    joint = matcore.partial_trace(rho, dims, keep={2})
    step_a = matcore.partial_trace(rho, dims, keep={2, 3})
    step_a = matcore.partial_trace(step_a, [3, 2], keep={1})
    step_b = matcore.partial_trace(rho, dims, keep={1, 2})
    step_b = matcore.partial_trace(step_b, [2, 3], keep={2})
    comp_dev = max(
        matcore.frob_dist(joint, step_a), matcore.frob_dist(joint, step_b)
    )

    swap_dev = 0.0
    for ddims, i, j in ([2, 2], 1, 2), ([2, 2, 2, 2], 1, 3), ([2, 3, 2], 1, 3):
        s = matcore.swap_operator(ddims, i, j)
        n = s.shape[0]
        swap_dev = max(
            swap_dev, float(np.max(np.abs(s @ s - matcore.identity(n))))
        )

    exact = (matcore.SIGMA_X, np.diag([2.0, 0.5]).astype(complex), matcore.identity(2))
    a, b, c = exact
    assoc = matcore.kron(matcore.kron(a, b), c) - matcore.kron(a, matcore.kron(b, c))
    assoc_dev = float(np.max(np.abs(assoc)))

    uni_dev = 0.0
    for q in GRID_Q:
        for t in (0.3, 1.7):
            u = dynamics.evolve_oracle(q, t)
            uni_dev = max(
                uni_dev,
                matcore.frob_dist(u.conj().T @ u, matcore.identity(4)),
            )

    return [
        _check("partial trace composition", comp_dev, 1e-12, tol),
        _check("swap involution", swap_dev, 0.0, tol),
        _check("kron associativity", assoc_dev, 0.0, tol),
        _check("exponential unitarity", uni_dev, 1e-10, tol),
    ]


def check_representations(tol: float) -> list[CheckResult]:
    comm_dev = 0.0
    herm_dev = 0.0
    action_dev = 0.0
    spectrum_dev = 0.0
    for two_l in (1, 2, 3, 4):
        for q in (0.5, 1.0, 2.0, 5.0):
            rep = qsu2.build_irrep(two_l, q)
            ms = qsu2.m_values(rep.label)
            comm_dev = max(
                comm_dev,
                matcore.frob_norm(rep.jz @ rep.jp - rep.jp @ rep.jz - rep.jp),
                matcore.frob_norm(rep.jz @ rep.jm - rep.jm @ rep.jz + rep.jm),
                matcore.frob_norm(
                    rep.jp @ rep.jm
                    - rep.jm @ rep.jp
                    - np.diag(qsu2.q_number(2.0 * ms, q)).astype(complex)
                ),
            )
            h = qsu2.build_single_h(rep)
            herm_dev = max(herm_dev, matcore.hermiticity_defect(h))
            action_dev = max(
                action_dev, matcore.frob_dist(h, _single_h_from_action(rep))
            )
            ev = np.linalg.eigvalsh(h)
            spectrum_dev = max(
                spectrum_dev, float(np.max(np.abs(np.sort(ev) + np.sort(-ev)[::-1])))
            )

    halfspin_dev = max(
        matcore.frob_dist(
            qsu2.build_single_h(qsu2.build_irrep(1, q)), matcore.SIGMA_X
        )
        for q in (0.1, 1.0, 10.0)
    )

    # l >= 1 must feel the deformation: require a visible gap at q = 2
    gap = matcore.frob_dist(
        qsu2.build_single_h(qsu2.build_irrep(2, 2.0)),
        qsu2.build_single_h(qsu2.build_irrep(2, 1.0)),
    )
    visibility_dev = max(0.0, 1e-3 - gap)

    return [
        _check("representation commutators", comm_dev, 1e-12, tol),
        _check("single-site hermiticity", herm_dev, 1e-13, tol),
        _check("single-site action formula", action_dev, 1e-12, tol),
        _check("spin-1/2 q-independence", halfspin_dev, 1e-13, tol),
        _check("deformation visibility (l >= 1)", visibility_dev, 0.0, tol),
        _check("single-site spectrum sign symmetry", spectrum_dev, 1e-10, tol),
    ]


def _single_h_from_action(rep: qsu2.IrrepMatrices) -> np.ndarray:
    # Independent reconstruction from the two-term action
    # h |l, m> = q^(m + 1/2) sqrt([l-m][l+m+1]) |l, m+1>
    #          + q^(m - 1/2) sqrt([l+m][l-m+1]) |l, m-1>
    q = rep.q.q
    l = rep.label.spin
    ms = qsu2.m_values(rep.label)
    dim = rep.dim
    h = np.zeros((dim, dim), dtype=complex)
    for col, m in enumerate(ms):
        if col - 1 >= 0:
            h[col - 1, col] = q ** (m + 0.5) * np.sqrt(
                qsu2.q_number(l - m, q) * qsu2.q_number(l + m + 1, q)
            )
        if col + 1 < dim:
            h[col + 1, col] = q ** (m - 0.5) * np.sqrt(
                qsu2.q_number(l + m, q) * qsu2.q_number(l - m + 1, q)
            )
    return h


def check_hopf_structure(tol: float) -> list[CheckResult]:
    homo_dev = 0.0
    for two_l in (1, 2):
        for q in (0.5, 1.0, 2.0, 5.0):
            rep = qsu2.build_irrep(two_l, q)
            djp = hopf.coproduct_jpm(rep, +1)
            djm = hopf.coproduct_jpm(rep, -1)
            djz = hopf.coproduct_jz(rep)
            rhs = np.diag(qsu2.q_number(2.0 * np.real(np.diag(djz)), q)).astype(
                complex
            )
            homo_dev = max(
                homo_dev, matcore.frob_norm(djp @ djm - djm @ djp - rhs)
            )

    grouplike_dev = 0.0
    for q in (0.5, 1.0, 2.0, 5.0):
        rep = qsu2.build_irrep(1, q)
        via_exp = matcore.exp_hermitian(hopf.coproduct_jz(rep), np.log(q) / 2.0)
        grouplike_dev = max(
            grouplike_dev,
            matcore.frob_dist(hopf.coproduct_q_jz_half(rep), via_exp),
        )

    perm = hopf.basis_swap_01_10()
    equiv_dev = 0.0
    for q in GRID_Q:
        rep = qsu2.build_irrep(1, q)
        permuted = perm @ hopf.build_hab_via_coproduct(rep) @ perm
        equiv_dev = max(
            equiv_dev, matcore.frob_dist(permuted, hopf.build_hab_compact(q))
        )

    trivial_defect = hopf.cocommutativity_defect_at(1.0)

    growth_qs = (1.2, 1.5, 2.0, 3.0, 5.0)
    defects = [hopf.cocommutativity_defect_at(q) for q in growth_qs]
    growth_dev = max(
        [0.0] + [d0 - d1 for d0, d1 in zip(defects, defects[1:])]
    )
    if min(defects) <= 0.0:
        growth_dev = max(growth_dev, 1.0)
    inversion_dev = max(
        abs(hopf.cocommutativity_defect_at(q) - hopf.cocommutativity_defect_at(1 / q))
        for q in growth_qs
    )

    return [
        _check("coproduct homomorphism", homo_dev, 1e-10, tol),
        _check("group-like coproduct", grouplike_dev, 1e-12, tol),
        _check("composite hamiltonian equivalence", equiv_dev, 1e-13, tol),
        _check("cocommutativity trivial limit", trivial_defect, 1e-12, tol),
        _check("cocommutativity growth", growth_dev, 0.0, tol),
        _check("cocommutativity q-inversion symmetry", inversion_dev, 1e-12, tol),
    ]


def check_dynamics(tol: float) -> list[CheckResult]:
    cubic_dev = max(dynamics.cubic_defect(q) for q in GRID_Q)

    spectrum_dev = 0.0
    inversion_dev = 0.0
    for q in GRID_Q:
        a = dynamics.alpha_of(q)
        spectrum_dev = max(
            spectrum_dev,
            float(
                np.max(np.abs(dynamics.hab_spectrum(q) - np.array([-a, 0.0, 0.0, a])))
            ),
        )
        inversion_dev = max(
            inversion_dev,
            float(np.max(np.abs(dynamics.hab_spectrum(q) - dynamics.hab_spectrum(1 / q)))),
        )

    closed_dev = 0.0
    explicit_dev = 0.0
    for q in GRID_Q:
        for t in _t_grid(q):
            u_closed = dynamics.evolve_closed(q, t).u
            closed_dev = max(
                closed_dev,
                matcore.frob_dist(u_closed, dynamics.evolve_oracle(q, t)),
            )
            explicit_dev = max(
                explicit_dev,
                matcore.frob_dist(u_closed, dynamics.evolve_explicit(q, t)),
            )

    period_dev = 0.0
    group_dev = 0.0
    for q in (0.5, 1.5, 2.0, 5.0):
        period = dynamics.evolution_period(q)
        for t in (0.0, 0.4, 1.1):
            period_dev = max(
                period_dev,
                matcore.frob_dist(
                    dynamics.evolve_closed(q, t + period).u,
                    dynamics.evolve_closed(q, t).u,
                ),
            )
        for t1, t2 in ((0.3, 0.8), (1.0, 2.5)):
            group_dev = max(
                group_dev,
                matcore.frob_dist(
                    dynamics.evolve_closed(q, t1).u @ dynamics.evolve_closed(q, t2).u,
                    dynamics.evolve_closed(q, t1 + t2).u,
                ),
            )

    return [
        _check("cubic identity", cubic_dev, 1e-10, tol),
        _check("composite spectrum", spectrum_dev, 1e-10, tol),
        _check("closed form vs eigendecomposition", closed_dev, 1e-10, tol),
        _check("closed form vs explicit matrix", explicit_dev, 1e-10, tol),
        _check("evolution periodicity", period_dev, 1e-10, tol),
        _check("evolution group property", group_dev, 1e-10, tol),
        _check("spectra under q-inversion", inversion_dev, 1e-10, tol),
    ]


def check_entanglement_measures(tol: float) -> list[CheckResult]:
    route_dev = 0.0
    closed_dev = 0.0
    mixed_dev = 0.0
    slaved_dev = 0.0
    range_dev = 0.0
    for q in GRID_Q:
        for t in _t_grid(q):
            u = dynamics.evolve_closed(q, t).u
            e_closed = entops.op_entanglement_closed(q, t)
            e_choi = entops.op_entanglement_choi(u)
            e_trace = entops.op_entanglement_trace(u)
            et = entops.mixed_invariant(u)
            ep = entops.entangling_power(u)
            route_dev = max(route_dev, abs(e_choi - e_trace))
            closed_dev = max(closed_dev, abs(e_closed - e_choi))
            mixed_dev = max(mixed_dev, abs(et - 0.75))
            slaved_dev = max(slaved_dev, abs(ep - (4.0 / 9.0) * e_closed))
            range_dev = max(range_dev, e_closed - 0.5, -e_closed)

    rng = np.random.Generator(np.random.Philox(key=2))
    for _ in range(100):
        u = _haar_unitary(4, rng)
        route_dev = max(
            route_dev,
            abs(entops.op_entanglement_choi(u) - entops.op_entanglement_trace(u)),
        )

    local_dev = 0.0
    for q, t in ((2.0, 0.7), (0.5, 1.3), (3.0, 0.2)):
        u = dynamics.evolve_closed(q, t).u
        e_ref = entops.op_entanglement_choi(u)
        for _ in range(7):
            ua, ub = _haar_unitary(2, rng), _haar_unitary(2, rng)
            va, vb = _haar_unitary(2, rng), _haar_unitary(2, rng)
            dressed = matcore.kron(ua, ub) @ u @ matcore.kron(va, vb)
            local_dev = max(
                local_dev, abs(entops.op_entanglement_choi(dressed) - e_ref)
            )

    e_period_dev = 0.0
    inversion_dev = 0.0
    for q in (0.5, 2.0, 3.0, 5.0):
        period = dynamics.evolution_period(q)
        for t in (0.0, 0.6, 1.9):
            e_period_dev = max(
                e_period_dev,
                abs(
                    entops.op_entanglement_closed(q, t + period)
                    - entops.op_entanglement_closed(q, t)
                ),
            )
        for t in _t_grid(q)[:50]:
            inversion_dev = max(
                inversion_dev,
                abs(
                    entops.op_entanglement_closed(q, t)
                    - entops.op_entanglement_closed(1 / q, t)
                ),
            )

    return [
        _check("entanglement route equivalence", route_dev, 1e-10, tol),
        _check("closed-form entanglement", closed_dev, 1e-10, tol),
        _check("mixed invariant constancy", mixed_dev, 1e-10, tol),
        _check("slaved entangling power", slaved_dev, 1e-10, tol),
        _check("entanglement range", range_dev, 1e-12, tol),
        _check("local unitary invariance", local_dev, 1e-10, tol),
        _check("entanglement periodicity", e_period_dev, 1e-12, tol),
        _check("q-inversion symmetry of E", inversion_dev, 1e-12, tol),
    ]


def check_known_gates(tol: float) -> list[CheckResult]:
    swap = matcore.swap_operator([2, 2], 1, 2)
    eye = matcore.identity(4)
    dev = max(
        abs(entops.op_entanglement_choi(swap) - 0.75),
        abs(entops.op_entanglement_trace(swap) - 0.75),
        abs(entops.op_entanglement_choi(matcore.CNOT) - 0.5),
        abs(entops.op_entanglement_trace(matcore.CNOT) - 0.5),
        abs(entops.entangling_power(matcore.CNOT) - 2.0 / 9.0),
        abs(entops.entangling_power(swap)),
        abs(entops.op_entanglement_choi(eye)),
        abs(entops.mixed_invariant(eye) - 0.75),
        abs(entops.mixed_invariant(swap)),
    )
    return [_check("known gate values", dev, 1e-12, tol)]


def check_maximization(tol: float) -> list[CheckResult]:
    analytic_dev = 0.0
    for q in np.linspace(1.0, 5.0, 50):
        _, e_max = entops.maximize_entanglement(q)
        analytic_dev = max(analytic_dev, abs(e_max - entops._e_max_analytic(q)))

    t_star, e_max = entops.maximize_entanglement(2.0)
    spot_dev = abs(
        entops.op_entanglement_choi(dynamics.evolve_oracle(2.0, t_star)) - e_max
    )
    return [
        _check("entanglement maximization vs analytic", analytic_dev, 1e-8, tol),
        _check("maximizer spot check (numeric route)", spot_dev, 1e-10, tol),
    ]


def check_monte_carlo() -> list[CheckResult]:
    q = 2.0
    t = np.pi / dynamics.alpha_of(q)
    u = dynamics.evolve_closed(q, t).u
    expected = (4.0 / 9.0) * entops.op_entanglement_closed(q, t)
    est, se = entops.ep_monte_carlo(u, MC_SAMPLES, MC_SEED)
    z = abs(est - expected) / se
    est2, _ = entops.ep_monte_carlo(u, MC_SAMPLES, MC_SEED)
    return [
        CheckResult("monte carlo z-score", float(z), MC_Z_BOUND),
        CheckResult("monte carlo determinism", abs(est - est2), 0.0),
    ]


def run_all(tolerance: float = matcore.DEFAULT_TOL) -> list[CheckResult]:
    """Run every check group; float bounds are min(spec bound, tolerance)."""
    return list(
        chain(
            check_matrix_kernel(tolerance),
            check_representations(tolerance),
            check_hopf_structure(tolerance),
            check_dynamics(tolerance),
            check_entanglement_measures(tolerance),
            check_known_gates(tolerance),
            check_maximization(tolerance),
            check_monte_carlo(),
        )
    )
