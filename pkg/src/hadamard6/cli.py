"""Command-line front end.

Exit codes: 0 success / equivalent / Hadamard, 1 negative verdict,
2 regime or usage error, 3 verification failure, 4 parse error.
"""
from __future__ import annotations

import argparse
import cmath
import itertools
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .errors import ExceptionalDirection, MatrixFormatError, NearPole, NotHadamard, OutOfRange, RegimeMismatch, VerificationFailed
from .family import (
    Anchor,
    FamilyPoint,
    Regime,
    SignChoice,
    build_degenerate,
    build_halfpi_limit,
    build_matrix,
    build_theta0_limit,
    build_theta0_z3_anchor,
    classify_regime,
    snap_to_curve,
)
from .mat_core import Tolerance, format_matrix, read_matrix, write_matrix
from .moebius import NEAR_DEGENERACY_BAND
from .params import SQRT3, LambdaParams
from .verify import are_equivalent, h2_reducible, is_hadamard, perm_cycles

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_VERIFY, EXIT_PARSE = 0, 1, 2, 3, 4
TSV_HEADER = "theta\tphi\tpsi1\tregime\tunimod_err\tunit_err\treducible"


@dataclass(frozen=True)
class ScanSpec:
    theta_steps: int
    phi_steps: int
    psi_steps: int
    margin: float
    output_path: Path

    def __post_init__(self):
        if min(self.theta_steps, self.phi_steps, self.psi_steps) < 1:
            raise ValueError("grid steps must be >= 1")
        if not self.margin >= 0:
            raise ValueError("margin must be >= 0")


def _tol(args) -> Tolerance:
    return Tolerance(eps_unimodular=args.tol_unimod, eps_unitarity=args.tol_unit)


def _angle(args, value: float) -> float:
    return math.radians(value) if args.degrees else value


def _emit(h, out, comments) -> None:
    if out:
        write_matrix(out, h, comments)
    else:
        sys.stdout.write(format_matrix(h, comments))


def _report_lines(h, tol: Tolerance) -> list[str]:
    r = is_hadamard(h, tol)
    return [f"unimodular_error {r.unimodular_error:.17g}",
            f"unitarity_error {r.unitarity_error:.17g}"]


def cmd_gen(args) -> int:
    tol = _tol(args)
    try:
        signs = SignChoice.parse(args.signs)
        theta, phi, psi1 = (_angle(args, v) for v in (args.theta, args.phi, args.psi1))
        fp = FamilyPoint(theta, phi, psi1)
    except (ValueError, OutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    regime = classify_regime(fp.lam, eps=NEAR_DEGENERACY_BAND)
    lines = []
    try:
        if regime is Regime.Generic:
            h = build_matrix(fp, signs, tol)
        elif regime in (Regime.DegenerateA, Regime.DegenerateB):
            snapped = snap_to_curve(fp.lam, regime)
            lines.append(f"snapped phi {snapped.phi:.17g} onto the degeneracy curve")
            h = build_degenerate(snapped, cmath.exp(1j * fp.psi1), Anchor.Z1, signs, tol)
        else:
            kind = "theta0" if regime is Regime.DoublyDegenerateTheta0 else "halfpi"
            print(f"error: point is {regime.value}; use `gen-limit {kind}`", file=sys.stderr)
            return EXIT_USAGE
    except VerificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (RegimeMismatch, NearPole) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    lines = [f"regime {regime.value}", *lines, *_report_lines(h, tol)]
    for line in lines:
        print(line, file=sys.stdout if args.out else sys.stderr)
    _emit(h, args.out, lines)
    return EXIT_OK


def cmd_gen_limit(args) -> int:
    tol = _tol(args)
    try:
        phi = _angle(args, args.phi)
        z = cmath.exp(1j * _angle(args, args.z))
        anchor = Anchor(args.anchor)
        if args.kind == "theta0":
            if anchor is Anchor.Z1:
                h = build_theta0_limit(phi, z, tol)
                family = "F6(2) (Fourier family)"
            else:
                h = build_theta0_z3_anchor(z, phi, tol)
                family = "subfamily of (F6(2))^T (transposed Fourier family)"
        else:
            h = build_halfpi_limit(phi, z, anchor, tol)
            family = "(F6(2))^T (transposed Fourier family)"
    except (ExceptionalDirection, NearPole, OutOfRange, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    lines = [f"limit {args.kind} anchor {anchor.value}", f"family {family}", *_report_lines(h, tol)]
    for line in lines:
        print(line, file=sys.stdout if args.out else sys.stderr)
    _emit(h, args.out, lines)
    return EXIT_OK


def _load(path):
    try:
        return read_matrix(path)
    except (MatrixFormatError, OSError) as exc:
        print(f"parse error: {path}: {exc}", file=sys.stderr)
        return None


def cmd_verify(args) -> int:
    tol = _tol(args)
    h = _load(args.input)
    if h is None:
        return EXIT_PARSE
    r = is_hadamard(h, tol)
    print(f"unimodular_error {r.unimodular_error:.17g}")
    print(f"unitarity_error {r.unitarity_error:.17g}")
    print(f"hadamard {str(r.is_hadamard).lower()}")
    if not r.is_hadamard:
        print("reducible n/a")
        return EXIT_NEGATIVE
    print(f"reducible {str(h2_reducible(h, tol)).lower()}")
    return EXIT_OK


def cmd_equiv(args) -> int:
    tol = _tol(args)
    h1 = _load(args.a)
    h2 = _load(args.b)
    if h1 is None or h2 is None:
        return EXIT_PARSE
    try:
        rep = are_equivalent(h1, h2, tol)
    except NotHadamard as exc:
        print(f"not Hadamard: {exc}")
        return EXIT_NEGATIVE
    if not rep.equivalent:
        print("equivalent false")
        return EXIT_NEGATIVE
    print("equivalent true")
    print(f"row_perm {perm_cycles(rep.row_perm)}")
    print(f"col_perm {perm_cycles(rep.col_perm)}")
    print(f"max_entry_error {rep.max_entry_error:.3e}")
    return EXIT_OK


def scan_grid(spec: ScanSpec) -> list[tuple[float, float, float]]:
    """Half-open grid k*pi/n on each axis, in theta-major order."""
    axes = [[math.pi * k / n for k in range(n)] for n in (spec.theta_steps, spec.phi_steps, spec.psi_steps)]
    return list(itertools.product(*axes))


def scan_point(point, margin: float, tol: Tolerance):
    """One TSV record; points within ``margin`` of a degeneracy curve are skipped."""
    theta, phi, psi1 = point
    # |alpha|^2 - |beta|^2 = 2 sqrt(3) * curve value
    band = max(NEAR_DEGENERACY_BAND, 2 * SQRT3 * margin)
    regime = classify_regime(LambdaParams(theta, phi), eps=band)
    if regime is not Regime.Generic:
        return (theta, phi, psi1, regime.value, math.nan, math.nan, None, "skipped")
    try:
        h = build_matrix(FamilyPoint(theta, phi, psi1), tol=tol)
    except (VerificationFailed, NearPole) as exc:
        return (theta, phi, psi1, regime.value, math.nan, math.nan, None, f"failed: {exc}")
    r = is_hadamard(h, tol)
    return (theta, phi, psi1, regime.value, r.unimodular_error, r.unitarity_error,
            h2_reducible(h, tol), "ok")


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return "nan" if math.isnan(v) else f"{v:.17g}"
    return str(v)


def run_scan(spec: ScanSpec, tol: Tolerance, jobs: int = 1):
    grid = scan_grid(spec)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            # map keeps grid order whatever the completion order
            records = list(ex.map(scan_point, grid, itertools.repeat(spec.margin),
                                  itertools.repeat(tol), chunksize=32))
    else:
        records = [scan_point(p, spec.margin, tol) for p in grid]
    return records


def cmd_scan(args) -> int:
    tol = _tol(args)
    try:
        spec = ScanSpec(args.theta_steps, args.phi_steps, args.psi_steps, args.margin, Path(args.out))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    records = run_scan(spec, tol, args.jobs)
    ok = [r for r in records if r[7] == "ok"]
    failed = [r for r in records if r[7].startswith("failed")]
    max_ue = max((r[4] for r in ok), default=0.0)
    max_re = max((r[5] for r in ok), default=0.0)
    summary = (f"# points {len(records)} generic {len(ok) + len(failed)} skipped "
               f"{len(records) - len(ok) - len(failed)} failed {len(failed)} "
               f"max_unimod_err {max_ue:.3e} max_unit_err {max_re:.3e}")
    with open(spec.output_path, "w") as fh:
        fh.write(TSV_HEADER + "\n")
        for r in records:
            fh.write("\t".join(_fmt(v) for v in r[:7]) + "\n")
        fh.write(summary + "\n")
    print(summary.lstrip("# "))
    for r in failed:
        print(f"failed at theta={r[0]:.6g} phi={r[1]:.6g} psi1={r[2]:.6g}: {r[7]}", file=sys.stderr)
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hadamard6", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-unimod", type=float, default=1e-10)
    common.add_argument("--tol-unit", type=float, default=1e-9)
    angles = argparse.ArgumentParser(add_help=False)
    angles.add_argument("--degrees", action="store_true", help="angles are given in degrees")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common, angles], help="build a family member")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--psi1", type=float, required=True)
    p.add_argument("--signs", default="++++", help="4 chars, '-' flips z1..z4")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("gen-limit", parents=[common, angles], help="doubly degenerate limit member")
    p.add_argument("kind", choices=["theta0", "halfpi"])
    p.add_argument("--phi", type=float, required=True, help="direction of approach")
    p.add_argument("--z", type=float, required=True, help="phase of the free z parameter")
    p.add_argument("--anchor", choices=["z1", "z3"], default="z1")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen_limit)

    p = sub.add_parser("verify", parents=[common], help="check a matrix file")
    p.add_argument("input")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("equiv", parents=[common], help="test two matrix files for equivalence")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("scan", parents=[common], help="grid scan over (theta, phi, psi1)")
    p.add_argument("--theta-steps", type=int, default=12)
    p.add_argument("--phi-steps", type=int, default=12)
    p.add_argument("--psi-steps", type=int, default=12)
    p.add_argument("--margin", type=float, default=0.05)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        Tolerance(args.tol_unimod, args.tol_unit)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
