"""Command-line front end.

Subcommands: classify, classify-ic, sample, periodic, lattice,
lattice-obstruction, verify, elliptic.  Output is JSON (default for the
scalar reports) or CSV (trajectory samples); floats are rendered with 17
significant digits so files round-trip bit-exactly.

Exit codes: 0 success, 1 domain error, 2 verification failure, 64 usage
error.  HEISENMAG_TOL scales every verification threshold.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import acceptance
from .elliptic import appendix_integrals, complete_K, jacobi_cn, legendre_relation_defect
from .errors import HeisenmagError
from .heisenberg import LorentzForce, canonical_to_json, classify_force
from .periodic import (
    LatticeElement,
    build_periodic,
    find_lambda_periodic,
    lattice_obstruction_check,
)
from .quartic import Branch, InitialData, build_profile
from .trajectory import make_solution, reflect_for_negative_x0

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2
EXIT_USAGE = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with code 2
        raise _UsageError(message)


def _f(v: float) -> str:
    return format(float(v), ".17g")


def _render_floats(obj):
    """JSON-ready structure with 17-significant-digit float rendering."""
    if isinstance(obj, float):
        return float(_f(obj))
    if isinstance(obj, dict):
        return {k: _render_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_render_floats(v) for v in obj]
    return obj


def _emit_json(obj, out) -> None:
    json.dump(_render_floats(obj), out, indent=2)
    out.write("\n")


def export_samples(rows, header, path=None, fmt: str = "csv"):
    """Write sampled rows as CSV (17 significant digits) or JSON."""
    close = False
    if path is None:
        out = sys.stdout
    else:
        try:
            out = open(path, "w", encoding="utf-8")
        except OSError as exc:
            raise HeisenmagError(f"cannot write {path}: {exc}") from exc
        close = True
    try:
        if fmt == "csv":
            out.write(",".join(header) + "\n")
            for row in rows:
                out.write(",".join(_f(v) for v in row) + "\n")
        else:
            _emit_json([dict(zip(header, row)) for row in rows], out)
    finally:
        if close:
            out.close()


def _time_grid(t_max: float, dt: float) -> list[float]:
    if dt <= 0.0:
        raise HeisenmagError("--dt must be positive")
    if t_max < 0.0:
        return []
    n = int(math.floor(t_max / dt + 1e-9))
    ts = [i * dt for i in range(n + 1)]
    if not ts or abs(ts[-1] - t_max) > 1e-12 * max(1.0, t_max):
        ts.append(t_max)
    return ts


def _profile_json(data: InitialData) -> dict:
    prof = build_profile(data)
    return {
        "x0": data.x0,
        "y0": data.y0,
        "z0": data.z0,
        "rho": data.rho,
        "p0": prof.p0,
        "q0": prof.q0,
        "delta": prof.delta,
        "delta_is_boundary": prof.delta_is_boundary,
        "branch": prof.branch.value,
        "roots": [[r.real, r.imag] for r in prof.roots],
        "r1": prof.r1,
        "r4": prof.r4,
        "delta1": prof.delta1,
        "delta4": prof.delta4,
        "k": prof.k,
        "k1": prof.k1,
        "mu": prof.mu,
        "r_double": prof.r_double,
    }


def _cmd_classify(args, out) -> int:
    force = LorentzForce(alpha=args.alpha, beta=args.beta, rho=args.rho)
    out.write(canonical_to_json(classify_force(force)) + "\n")
    return EXIT_OK


def _cmd_classify_ic(args, out) -> int:
    data = InitialData(args.x0, args.y0, args.z0, args.rho)
    _emit_json(_profile_json(data), out)
    return EXIT_OK


def _cmd_sample(args, out) -> int:
    data = InitialData(args.x0, args.y0, args.z0, args.rho)
    if data.x0 >= 0.0:
        traj = make_solution(data)
    else:
        traj = reflect_for_negative_x0(data)
    ts = _time_grid(args.t_max, args.dt)
    energy0 = data.energy()
    points = traj.sample(ts)
    rows = []
    for t, (px, py, pz) in zip(ts, points):
        # body-frame speed needs no y: y' = h(x) - 1 and the centre
        # component of the velocity sits at the conserved level x + z0
        xp = traj.x_prime(t)
        speed_sq = xp ** 2 + (data.h(px) - 1.0) ** 2 + (px + data.z0) ** 2
        rows.append((t, px, py, pz, 0.5 * speed_sq - energy0))
    export_samples(rows, ["t", "x", "y", "z", "energy_residual"], args.output, args.format)
    return EXIT_OK


def _cmd_periodic(args, out) -> int:
    _, report = build_periodic(args.energy, args.e, args.rho)
    data = report.pop("initial_data")
    report["x0"], report["y0"], report["z0"] = data.x0, data.y0, data.z0
    report["closure_residual"] = max(
        report["closure_x"], report["closure_y"], report["closure_z"]
    )
    _emit_json(report, out)
    return EXIT_OK


def _cmd_lattice(args, out) -> int:
    try:
        y1_str, z1_str = args.lam.split(",")
    except ValueError as exc:
        raise _UsageError("--lambda expects 'y1,z1'") from exc
    lam = LatticeElement(0.0, float(y1_str), float(z1_str))
    res = find_lambda_periodic(lam, args.energy, args.rho)
    _emit_json(
        {
            "lambda": {"x1": lam.x1, "y1": lam.y1, "z1": lam.z1},
            "k": args.k,
            "energy": args.energy,
            "rho": args.rho,
            "n": res.n,
            "c": res.c,
            "d": res.d,
            "e": res.e,
            "base_period": res.base_period,
            "omega": res.omega,
            "conjugator": res.conjugator,
            "x0": res.base_solution.data.x0,
            "y0": res.base_solution.data.y0,
            "z0": res.base_solution.data.z0,
            "residual": res.residual,
        },
        out,
    )
    return EXIT_OK


def _cmd_lattice_obstruction(args, out) -> int:
    entries = [float(v) for v in args.basis.split(",")]
    if len(entries) != 4:
        raise _UsageError("--basis expects 'a,b,c,d' for [[a, b], [c, d]]")
    basis = [[entries[0], entries[1]], [entries[2], entries[3]]]
    admits = lattice_obstruction_check(basis, center_step=args.center_step)
    _emit_json({"basis": basis, "admits_period_candidates": admits}, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.case is not None:
        branch = Branch(args.case)
        record = acceptance.check_branch(branch, args.rho)
        record.pop("data")
        _emit_json(record, out)
        return EXIT_OK
    names = list(acceptance.CRITERIA) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        if name not in acceptance.CRITERIA:
            raise _UsageError(
                f"unknown suite '{name}'; choose from {', '.join(acceptance.CRITERIA)} or all"
            )
        result = acceptance.run_criterion(name, seed=args.seed)
        out.write(result.line() + "\n")
        if not result.passed:
            failed += 1
    out.write(f"{len(names) - failed}/{len(names)} criteria passed\n")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def _cmd_elliptic(args, out) -> int:
    if not args.check:
        raise _UsageError("elliptic requires --check")
    failures = 0
    out.write("check                                   value        status\n")
    worst = max(
        abs(legendre_relation_defect(float(k))) for k in np.linspace(0.01, 0.99, 50)
    )
    ok = worst < 1e-12 * acceptance.tolerance_scale()
    failures += 0 if ok else 1
    out.write(f"legendre relation defect (50 moduli)    {worst:.3e}    {'ok' if ok else 'FAIL'}\n")
    from scipy.integrate import quad

    for a, b, k in [
        (1.0, 2.0, 0.0),
        (0.7, 1.3, 0.5),
        (0.5, 3.0, 0.9),
        (1.0, -2.0, 0.3),
        (2.0, 2.5, 0.7),
    ]:
        vals = appendix_integrals(a, b, k)
        period = 4.0 * complete_K(k)
        i1, _ = quad(lambda s: 1.0 / (a * jacobi_cn(s, k) + b), 0.0, period,
                     epsabs=1e-13, epsrel=1e-13, limit=400)
        i2, _ = quad(lambda s: 1.0 / (a * jacobi_cn(s, k) + b) ** 2, 0.0, period,
                     epsabs=1e-13, epsrel=1e-13, limit=400)
        gap = max(abs(vals["I1"] - i1), abs(vals["I2"] - i2))
        ok = gap < 1e-10 * acceptance.tolerance_scale()
        failures += 0 if ok else 1
        label = f"integral identities A={a} B={b} k={k}"
        out.write(f"{label:<40}{gap:.3e}    {'ok' if ok else 'FAIL'}\n")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def build_parser() -> _Parser:
    parser = _Parser(prog="heisenmag", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="canonical form of a Lorentz force")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("classify-ic", help="quartic profile of an initial condition")
    for flag in ("--x0", "--y0", "--z0", "--rho"):
        p.add_argument(flag, type=float, required=True)
    p.set_defaults(fn=_cmd_classify_ic)

    p = sub.add_parser("sample", help="sample a trajectory on a time grid")
    for flag in ("--x0", "--y0", "--z0", "--rho"):
        p.add_argument(flag, type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None)
    p.set_defaults(fn=_cmd_sample)

    p = sub.add_parser("periodic", help="closed trajectory at a given energy")
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--energy", type=float, required=True)
    p.add_argument("--e", type=float, default=0.0)
    p.set_defaults(fn=_cmd_periodic)

    p = sub.add_parser("lattice", help="lattice-periodic trajectory search")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="y1,z1")
    p.add_argument("--energy", type=float, required=True)
    p.add_argument("--rho", type=float, default=1.0)
    p.set_defaults(fn=_cmd_lattice)

    p = sub.add_parser("lattice-obstruction", help="period-candidate existence test")
    p.add_argument("--basis", required=True, help="a,b,c,d for [[a, b], [c, d]]")
    p.add_argument("--center-step", type=float, default=0.5)
    p.set_defaults(fn=_cmd_lattice_obstruction)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--case", choices=[b.value for b in Branch if b is not Branch.TRIVIAL],
                   default=None, help="cross-validate one branch representative")
    p.add_argument("--rho", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("elliptic", help="elliptic kernel reference corpus")
    p.add_argument("--check", action="store_true")
    p.set_defaults(fn=_cmd_elliptic)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args, sys.stdout)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HeisenmagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
