"""Command-line front end.

Subcommands: table1, witness, sweep, heatmap, average, densities,
feasibility, verify, dimensional.  Angles are accepted in radians
(--theta) or as fractions of the period (--t2-frac, canonical since the
published violation table is indexed by t2/T).  Output is CSV (default)
or JSON to stdout or --out; exit codes: 0 ok, 1 usage/invalid input,
2 computation failure, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from ._output import OutputRecord
from .constants import QUAD_TOL
from .errors import InputDomainError, KernelOverflowError, MroscError, \
    NormDriftError, PhaseSingularError, QuadratureError
from .feasibility import feasibility_report
from .imprecision import averaged_witness, heatmap
from .oracle import SolverConfig, oracle_probability_table
from .quantum import density_profile
from .witness import (
    OscillatorParams,
    TABLE_ROWS,
    WitnessReport,
    beta2_offset_rule,
    gamma_from_dimensional,
    gamma_from_offset,
    probability_table,
    table1,
    witness_dimensional,
    witness_report,
)

_WITNESS_COLUMNS = [
    "theta_rad", "gamma", "eps1_tilde", "eps2_tilde",
    "n_plus", "n_minus", "nsit_violation",
    "L_pp", "L_pm", "L_mp", "L_mm", "lgi_violation", "lgi_violated",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        raise UsageError(message)


def _witness_row(r: WitnessReport) -> list:
    return [r.theta, r.gamma, r.eps1_tilde, r.eps2_tilde,
            r.n_plus, r.n_minus, r.nsit_violation,
            float(r.L[0, 0]), float(r.L[0, 1]), float(r.L[1, 0]), float(r.L[1, 1]),
            r.lgi_violation, r.lgi_violated]


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", type=Path, default=None, help="write to file instead of stdout")


def _add_angle(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--theta", type=float, help="measurement phase in radians")
    g.add_argument("--t2-frac", type=float, help="t2 as a fraction of the period (theta = 2*pi*frac)")


def _add_boundary(p: argparse.ArgumentParser) -> None:
    p.add_argument("--c", type=float, default=float(np.sqrt(2.0)),
                   help="boundary offset from the packet peak, in spreads (default sqrt(2))")
    p.add_argument("--sign", choices=("+", "-"), default="+")


def _angle_of(args) -> float:
    if args.theta is not None:
        return float(args.theta)
    return 2.0 * np.pi * float(args.t2_frac)


def _sign_of(args) -> int:
    return 1 if args.sign == "+" else -1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mrosc", description=__doc__)
    parser.add_argument("--version", action="version", version=f"mrosc {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("table1",
                       help="the seven published violation rows")
    _add_common(p)

    p = sub.add_parser("witness",
                       help="single witness report at one phase")
    _add_angle(p)
    _add_boundary(p)
    p.add_argument("--eps1", type=float, default=0.0, help="dimensionless first-boundary offset")
    p.add_argument("--eps2", type=float, default=0.0, help="dimensionless second-boundary offset")
    _add_common(p)

    p = sub.add_parser("sweep",
                       help="witness reports over a phase range")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--t2-frac-range", nargs=2, type=float, metavar=("MIN", "MAX"))
    g.add_argument("--theta-range", nargs=2, type=float, metavar=("MIN", "MAX"))
    p.add_argument("--n", type=int, default=25)
    _add_boundary(p)
    p.add_argument("--eps1", type=float, default=0.0)
    p.add_argument("--eps2", type=float, default=0.0)
    _add_common(p)

    p = sub.add_parser("heatmap",
                       help="witness grid over boundary offsets")
    _add_angle(p)
    p.add_argument("--eps-min", type=float, default=-2.0)
    p.add_argument("--eps-max", type=float, default=2.0)
    p.add_argument("--n", type=int, default=21)
    _add_boundary(p)
    p.add_argument("--quantity", choices=("nplus", "lgi"), default="nplus",
                   help="which matrix the CSV carries (JSON carries both)")
    p.add_argument("--workers", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("average",
                       help="uniform average of the witnesses over an offset rectangle")
    _add_angle(p)
    p.add_argument("--eps1-min", type=float, default=-1.0)
    p.add_argument("--eps1-max", type=float, default=1.0)
    p.add_argument("--eps2-min", type=float, default=-1.0)
    p.add_argument("--eps2-max", type=float, default=1.0)
    p.add_argument("--scheme", choices=("quadrature", "sampled"), default="quadrature")
    p.add_argument("--n", type=int, default=21)
    p.add_argument("--seed", type=int, default=None)
    _add_boundary(p)
    _add_common(p)

    p = sub.add_parser("densities",
                       help="free and branch densities on a grid")
    _add_angle(p)
    p.add_argument("--y-min", type=float, default=-6.0)
    p.add_argument("--y-max", type=float, default=6.0)
    p.add_argument("--points", type=int, default=241)
    _add_common(p)

    p = sub.add_parser("feasibility",
                       help="experimental feasibility numbers")
    p.add_argument("--mass", type=float, required=True, help="kg")
    p.add_argument("--omega", type=float, required=True, help="rad/s")
    p.add_argument("--sff", type=float, default=None, help="force noise power S_FF, N^2/Hz")
    p.add_argument("--delta-x", type=float, default=None, help="wavefunction width, m (default: SQL)")
    p.add_argument("--t2", type=float, default=None, help="s")
    p.add_argument("--wavelength", type=float, default=None, help="m")
    p.add_argument("--photons", type=float, default=None)
    _add_common(p)

    p = sub.add_parser("verify",
                       help="grid-solver cross-check of the analytic probabilities")
    _add_angle(p)
    _add_boundary(p)
    p.add_argument("--gamma", type=float, default=None,
                   help="explicit second boundary (overrides --c/--sign)")
    p.add_argument("--tol", type=float, default=1e-3)
    p.add_argument("--points", type=int, default=SolverConfig.points)
    p.add_argument("--half-width", type=float, default=SolverConfig.y_half_width)
    p.add_argument("--steps-per-radian", type=int, default=SolverConfig.steps_per_radian)
    p.add_argument("--p0-tilde", type=float, default=SolverConfig.p0_tilde)
    _add_common(p)

    p = sub.add_parser("dimensional",
                       help="witness from SI inputs")
    p.add_argument("--mass", type=float, required=True, help="kg")
    p.add_argument("--omega", type=float, required=True, help="rad/s")
    p.add_argument("--p0", type=float, default=0.0, help="kg m/s")
    p.add_argument("--t2", type=float, required=True, help="s")
    p.add_argument("--beta2", type=float, default=None,
                   help="second boundary in m (default: offset rule with --c/--sign)")
    _add_boundary(p)
    p.add_argument("--eps1", type=float, default=0.0, help="first-boundary offset, m")
    p.add_argument("--eps2", type=float, default=0.0, help="second-boundary offset, m")
    _add_common(p)

    return parser


def _emit(args, record: OutputRecord) -> None:
    record.meta.setdefault("version", __version__)
    record.meta.setdefault("quad_tol", QUAD_TOL)
    text = record.render(args.format)
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _echo(argv: list[str]) -> str:
    return "mrosc " + " ".join(argv)


def _cmd_table1(args, argv) -> int:
    rows = []
    for (num, den), report in zip(TABLE_ROWS, table1()):
        rows.append([f"{num}/{den}", report.theta, report.nsit_violation,
                     report.lgi_violation, report.lgi_violated])
    _emit(args, OutputRecord(
        command=_echo(argv),
        params={"c": float(np.sqrt(2.0)), "sign": "+"},
        columns=["t2_over_T", "theta_rad", "nsit_violation", "lgi_violation", "lgi_violated"],
        rows=rows))
    return 0


def _cmd_witness(args, argv) -> int:
    report = witness_report(_angle_of(args), args.c, _sign_of(args),
                            (args.eps1, args.eps2))
    _emit(args, OutputRecord(
        command=_echo(argv),
        params={"c": args.c, "sign": args.sign},
        columns=_WITNESS_COLUMNS, rows=[_witness_row(report)]))
    return 0


def _cmd_sweep(args, argv) -> int:
    if args.n < 2:
        raise UsageError("--n must be >= 2")
    if args.theta_range is not None:
        thetas = np.linspace(args.theta_range[0], args.theta_range[1], args.n)
    else:
        thetas = 2 * np.pi * np.linspace(args.t2_frac_range[0], args.t2_frac_range[1], args.n)
    rows = [_witness_row(witness_report(t, args.c, _sign_of(args),
                                        (args.eps1, args.eps2)))
            for t in thetas]
    _emit(args, OutputRecord(
        command=_echo(argv), params={"c": args.c, "sign": args.sign, "n": args.n},
        columns=_WITNESS_COLUMNS, rows=rows))
    return 0


def _cmd_heatmap(args, argv) -> int:
    result = heatmap(_angle_of(args), (args.eps_min, args.eps_max),
                     (args.eps_min, args.eps_max), args.n, args.c,
                     _sign_of(args), workers=args.workers)
    matrix = result.n_plus if args.quantity == "nplus" else result.lgi_violation
    if args.format == "csv":
        columns = ["eps1\\eps2"] + [f"{e:.9g}" for e in result.eps2_axis]
        rows = [[float(e1)] + [float(v) for v in matrix[i]]
                for i, e1 in enumerate(result.eps1_axis)]
        record = OutputRecord(
            command=_echo(argv),
            params={"theta": _angle_of(args), "c": args.c, "sign": args.sign,
                    "quantity": args.quantity},
            columns=columns, rows=rows)
    else:
        record = OutputRecord(
            command=_echo(argv),
            params={"theta": _angle_of(args), "c": args.c, "sign": args.sign},
            columns=["eps1_axis", "eps2_axis", "n_plus", "lgi_violation"],
            rows=[[list(map(float, result.eps1_axis)),
                   list(map(float, result.eps2_axis)),
                   [list(map(float, r)) for r in result.n_plus],
                   [list(map(float, r)) for r in result.lgi_violation]]])
    _emit(args, record)
    return 0


def _cmd_average(args, argv) -> int:
    if args.scheme == "sampled" and args.seed is None:
        raise UsageError("--scheme sampled requires --seed")
    report = averaged_witness(
        _angle_of(args), (args.eps1_min, args.eps1_max),
        (args.eps2_min, args.eps2_max), args.c, _sign_of(args),
        scheme=args.scheme, n=args.n, seed=args.seed)
    _emit(args, OutputRecord(
        command=_echo(argv),
        params={"scheme": args.scheme, "n": args.n, "seed": args.seed,
                "eps1_range": f"[{args.eps1_min:.9g},{args.eps1_max:.9g}]",
                "eps2_range": f"[{args.eps2_min:.9g},{args.eps2_max:.9g}]"},
        columns=_WITNESS_COLUMNS, rows=[_witness_row(report)]))
    return 0


def _cmd_densities(args, argv) -> int:
    profile = density_profile(_angle_of(args), args.y_min, args.y_max, args.points)
    rows = [[float(y), float(f), float(p), float(m)]
            for y, f, p, m in zip(profile.y_grid, profile.rho_free,
                                  profile.rho_plus, profile.rho_minus)]
    _emit(args, OutputRecord(
        command=_echo(argv), params={"theta": profile.theta},
        columns=["y", "rho_free", "rho_plus", "rho_minus"], rows=rows))
    return 0


def _cmd_feasibility(args, argv) -> int:
    report = feasibility_report(
        args.mass, args.omega, s_ff=args.sff, delta_x=args.delta_x,
        t2=args.t2, wavelength=args.wavelength, photons=args.photons)
    _emit(args, OutputRecord(
        command=_echo(argv),
        params={"mass_kg": args.mass, "omega_rad_s": args.omega,
                "decoherence_margin": report.decoherence_margin},
        columns=["sql_m", "offset_half_range_m", "force_noise_ceiling",
                 "scatter_resolution_m", "decoherence_ok"],
        rows=[[report.sql, report.offset_half_range, report.force_noise_ceiling,
               report.scatter_resolution, report.decoherence_ok]]))
    return 0


def _cmd_verify(args, argv) -> int:
    theta = _angle_of(args)
    gamma = args.gamma if args.gamma is not None else gamma_from_offset(args.c, _sign_of(args))
    config = SolverConfig(y_half_width=args.half_width, points=args.points,
                          steps_per_radian=args.steps_per_radian,
                          p0_tilde=args.p0_tilde)
    numeric = oracle_probability_table(theta, gamma, config)
    analytic = probability_table(theta, gamma)
    joint_err = float(np.max(np.abs(numeric.joint - analytic.joint)))
    pq_err = max(abs(a - b) for a, b in zip(numeric.p_q, analytic.p_q))
    pr_err = max(abs(a - b) for a, b in zip(numeric.p_r, analytic.p_r))
    worst = max(joint_err, pq_err, pr_err)
    passed = bool(worst <= args.tol)
    _emit(args, OutputRecord(
        command=_echo(argv),
        params={"theta": theta, "gamma": gamma, "tol": args.tol,
                "points": args.points, "half_width": args.half_width,
                "steps_per_radian": args.steps_per_radian,
                "p0_tilde": args.p0_tilde},
        columns=["max_abs_discrepancy", "joint_err", "pq_err", "pr_err", "passed"],
        rows=[[worst, joint_err, pq_err, pr_err, passed]]))
    if not passed:
        print(f"verification failed: discrepancy {worst:.3e} > tol {args.tol:.3e}",
              file=sys.stderr)
        return 3
    return 0


def _cmd_dimensional(args, argv) -> int:
    params = OscillatorParams(mass=args.mass, omega=args.omega, p0=args.p0)
    if args.beta2 is not None:
        beta2 = args.beta2
    else:
        beta2 = beta2_offset_rule(params, args.t2, args.c, _sign_of(args))
    report = witness_dimensional(params, args.t2, beta2, args.eps1, args.eps2)
    gamma = gamma_from_dimensional(params, beta2, args.t2)
    _emit(args, OutputRecord(
        command=_echo(argv),
        params={"mass_kg": args.mass, "omega_rad_s": args.omega,
                "p0_kg_m_s": args.p0, "t2_s": args.t2, "beta2_m": beta2,
                "gamma": gamma},
        columns=_WITNESS_COLUMNS, rows=[_witness_row(report)]))
    return 0


_COMMANDS = {
    "table1": _cmd_table1,
    "witness": _cmd_witness,
    "sweep": _cmd_sweep,
    "heatmap": _cmd_heatmap,
    "average": _cmd_average,
    "densities": _cmd_densities,
    "feasibility": _cmd_feasibility,
    "verify": _cmd_verify,
    "dimensional": _cmd_dimensional,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.cmd](args, argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except PhaseSingularError as exc:
        print(f"singular phase: {exc}", file=sys.stderr)
        return 1
    except InputDomainError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1
    except (QuadratureError, NormDriftError, KernelOverflowError) as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 2
    except MroscError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
