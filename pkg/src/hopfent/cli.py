"""Command-line front end: verification runs, CSV sweeps, Monte Carlo checks.

Subcommands
-----------
verify      run the full invariant suite, one report line per check
sweep-time  CSV of E, Et, ep and cross-route deviations along t, per q
sweep-q     CSV of the maximized E over one period as a function of q
mc-ep       Monte Carlo entangling-power estimate vs the closed form

Exit codes: 0 success, 1 verification or statistical failure, 2 usage
error.  All CSV output uses 17 significant digits and LF line endings,
so identical flags (and seed) reproduce identical bytes.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import dynamics, entops, verify

DEFAULT_SWEEP_QS = "1,1.5,2,3"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _q_list(text: str) -> list[float]:
    try:
        qs = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed q list: {text!r}")
    if not qs:
        raise argparse.ArgumentTypeError("empty q list")
    if any(q <= 0 for q in qs):
        raise argparse.ArgumentTypeError("all q values must be positive")
    return qs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfent",
        description="Verification and sweeps for coproduct-built two-qubit dynamics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the full invariant suite")
    p_verify.add_argument(
        "--tolerance",
        type=_positive_float,
        default=1e-10,
        help="absolute Frobenius tolerance; checks use min(spec bound, this) "
        "(default: %(default)s)",
    )

    p_time = sub.add_parser(
        "sweep-time", help="CSV sweep of entanglement measures over time"
    )
    p_time.add_argument(
        "--q",
        type=_q_list,
        default=None,
        metavar="Q1,Q2,...",
        help=f"comma-separated deformation values (default: {DEFAULT_SWEEP_QS}, "
        "an arbitrary illustrative choice)",
    )
    p_time.add_argument(
        "--points", type=int, default=200, help="time samples per q (>= 2)"
    )
    p_time.add_argument(
        "--periods",
        type=_positive_float,
        default=1.0,
        help="sweep length in units of the period 2*pi/alpha(q)",
    )
    p_time.add_argument("--out", required=True, help="output CSV path")

    p_q = sub.add_parser(
        "sweep-q", help="CSV sweep of the maximized entanglement over q"
    )
    p_q.add_argument("--min", dest="q_min", type=_positive_float, required=True)
    p_q.add_argument("--max", dest="q_max", type=_positive_float, required=True)
    p_q.add_argument("--points", type=int, default=50)
    p_q.add_argument("--out", required=True, help="output CSV path")

    p_mc = sub.add_parser(
        "mc-ep", help="Monte Carlo entangling power vs the closed form"
    )
    p_mc.add_argument("--q", type=_positive_float, required=True)
    p_mc.add_argument("--t", type=float, required=True)
    p_mc.add_argument(
        "--samples", type=int, default=100_000, help="number of product-state samples"
    )
    p_mc.add_argument("--seed", type=int, default=0, help="64-bit RNG seed")
    p_mc.add_argument("--out", default=None, help="optional one-row CSV path")

    return parser


def _write_text(path: str, text: str) -> bool:
    try:
        with open(path, "w", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return False
    return True


def cmd_verify(tolerance: float) -> int:
    results = verify.run_all(tolerance)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(
            f"{r.name:<{width}}  max defect {r.deviation:.3e}"
            f"  (bound {r.bound:.1e})  {status}"
        )
    failed = [r for r in results if not r.passed]
    print(
        f"{len(results) - len(failed)}/{len(results)} checks passed"
        + (f", {len(failed)} FAILED" if failed else "")
    )
    return 1 if failed else 0


def cmd_sweep_time(qs: list[float], points: int, periods: float, out: str) -> int:
    lines = ["q,t,E,E_tilde,ep,choi_vs_trace_dev,closed_vs_numeric_dev"]
    for q in sorted(qs):
        ts = np.linspace(0.0, periods * dynamics.evolution_period(q), points)
        for t in ts:
            point = dynamics.evolve_closed(q, t)
            e_closed = entops.op_entanglement_closed(q, t)
            e_tilde = entops.mixed_invariant(point.u)
            ep = entops.entangling_power(point.u)
            route_dev = abs(
                entops.op_entanglement_choi(point.u)
                - entops.op_entanglement_trace(point.u)
            )
            numeric_dev = abs(
                e_closed - entops.op_entanglement_choi(dynamics.evolve_oracle(q, t))
            )
            lines.append(
                ",".join(
                    _fmt(v)
                    for v in (q, t, e_closed, e_tilde, ep, route_dev, numeric_dev)
                )
            )
    return 0 if _write_text(out, "\n".join(lines) + "\n") else 2


def cmd_sweep_q(q_min: float, q_max: float, points: int, out: str) -> int:
    lines = ["q,t_star,E_max,analytic_E_max,deviation"]
    for q in np.linspace(q_min, q_max, points):
        t_star, e_max = entops.maximize_entanglement(q)
        analytic = entops._e_max_analytic(q)
        lines.append(
            ",".join(
                _fmt(v) for v in (q, t_star, e_max, analytic, abs(e_max - analytic))
            )
        )
    return 0 if _write_text(out, "\n".join(lines) + "\n") else 2


def cmd_mc_ep(q: float, t: float, samples: int, seed: int, out: str | None) -> int:
    u = dynamics.evolve_closed(q, t).u
    estimate, std_error = entops.ep_monte_carlo(u, samples, seed)
    closed = (4.0 / 9.0) * entops.op_entanglement_closed(q, t)
    diff = estimate - closed
    if std_error > 0.0:
        z = diff / std_error
    else:
        z = 0.0 if diff == 0.0 else float("inf") * np.sign(diff)
    print(f"estimate   {_fmt(estimate)}")
    print(f"std_error  {_fmt(std_error)}")
    print(f"closed     {_fmt(closed)}")
    print(f"z          {_fmt(z)}")
    if out is not None:
        text = (
            "q,t,n_samples,seed,estimate,std_error,closed,z\n"
            + ",".join(
                [_fmt(q), _fmt(t), str(samples), str(seed)]
                + [_fmt(v) for v in (estimate, std_error, closed, z)]
            )
            + "\n"
        )
        if not _write_text(out, text):
            return 2
    return 0 if abs(z) <= 4.0 else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "verify":
        return cmd_verify(args.tolerance)
    if args.command == "sweep-time":
        if args.points < 2:
            parser.error("--points must be at least 2")
        qs = args.q if args.q is not None else _q_list(DEFAULT_SWEEP_QS)
        return cmd_sweep_time(qs, args.points, args.periods, args.out)
    if args.command == "sweep-q":
        if not args.q_min < args.q_max:
            parser.error("--min must be smaller than --max")
        if args.points < 2:
            parser.error("--points must be at least 2")
        return cmd_sweep_q(args.q_min, args.q_max, args.points, args.out)
    if args.command == "mc-ep":
        if args.samples < 100:
            parser.error("--samples must be at least 100")
        return cmd_mc_ep(args.q, args.t, args.samples, args.seed, args.out)
    parser.error(f"unknown command {args.command!r}")
    return 2


def entry_point() -> None:
    sys.exit(main())
