"""Construction of the dephased three-parameter family

    H = [[F2, Z1,          Z2         ],
         [Z3, Z3 A Z1 / 2, Z3 B Z2 / 2],
         [Z4, Z4 B Z1 / 2, Z4 A Z2 / 2]]

with z3^2 = M_A(z1^2), z4^2 = M_B(z1^2), z2^2 = M_B^-1(M_A(z1^2)), plus the
degenerate-curve and doubly degenerate constructions.
"""
from __future__ import annotations

import cmath
import enum
import itertools
import math
from dataclasses import dataclass, fields

import numpy as np

from .errors import ExceptionalDirection, NearPole, RegimeMismatch, VerificationFailed
from .families import principal_sqrt
from .mat_core import DEFAULT_TOL, F2, Tolerance, block_compose
from .moebius import (
    DEGENERACY_EPS,
    NEAR_DEGENERACY_BAND,
    apply,
    apply_inverse,
    degeneracy_info,
    from_a,
    from_b,
)
from .params import OMEGA, SQRT3, LambdaParams, ZBlockKind, a_matrix, check_angle, check_unimodular, z_block
from .verify import is_hadamard


class Regime(enum.Enum):
    Generic = "Generic"
    DegenerateA = "DegenerateA"
    DegenerateB = "DegenerateB"
    DoublyDegenerateTheta0 = "DoublyDegenerateTheta0"
    DoublyDegenerateHalfPi = "DoublyDegenerateHalfPi"


class Anchor(enum.Enum):
    Z1 = "z1"
    Z3 = "z3"


@dataclass(frozen=True)
class FamilyPoint:
    theta: float
    phi: float
    psi1: float

    def __post_init__(self):
        check_angle("theta", self.theta)
        check_angle("phi", self.phi)
        check_angle("psi1", self.psi1)

    @property
    def lam(self) -> LambdaParams:
        return LambdaParams(self.theta, self.phi)


@dataclass(frozen=True)
class ZQuad:
    z1: complex
    z2: complex
    z3: complex
    z4: complex

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, check_unimodular(getattr(self, f.name)))

    @classmethod
    def from_squares(cls, z1, z2s, z3s, z4s) -> "ZQuad":
        """z1 taken as given, the rest as principal roots of their squares."""
        return cls(z1, principal_sqrt(z2s), principal_sqrt(z3s), principal_sqrt(z4s))

    def squares(self) -> tuple[complex, complex, complex, complex]:
        return (self.z1 ** 2, self.z2 ** 2, self.z3 ** 2, self.z4 ** 2)


@dataclass(frozen=True)
class SignChoice:
    s1: bool = False
    s2: bool = False
    s3: bool = False
    s4: bool = False

    @classmethod
    def parse(cls, text: str) -> "SignChoice":
        """'+-+-' or '0101'; '-' / '1' flips the sign of that z."""
        if len(text) != 4 or any(c not in "+-01" for c in text):
            raise ValueError(f"sign string must be 4 chars from '+-01', got {text!r}")
        return cls(*(c in "-1" for c in text))

    @classmethod
    def all_choices(cls) -> list["SignChoice"]:
        return [cls(*bits) for bits in itertools.product((False, True), repeat=4)]

    def apply(self, q: ZQuad) -> ZQuad:
        s = (self.s1, self.s2, self.s3, self.s4)
        z = (q.z1, q.z2, q.z3, q.z4)
        return ZQuad(*(-zi if si else zi for si, zi in zip(s, z)))

    def __str__(self) -> str:
        return "".join("-" if s else "+" for s in (self.s1, self.s2, self.s3, self.s4))


def classify_regime(p: LambdaParams, eps: float = DEGENERACY_EPS) -> Regime:
    """Degeneracy of M_A and M_B at ``p``; doubly degenerate wins."""
    deg_a = abs(from_a(p).discriminant) <= eps
    deg_b = abs(from_b(p).discriminant) <= eps
    if deg_a and deg_b:
        # both vanish only near sin(theta) = 0 or (theta, phi) = (pi/2, 0 or pi)
        if abs(math.sin(p.theta)) < 0.5:
            return Regime.DoublyDegenerateTheta0
        return Regime.DoublyDegenerateHalfPi
    if deg_a:
        return Regime.DegenerateA
    if deg_b:
        return Regime.DegenerateB
    return Regime.Generic


def snap_to_curve(p: LambdaParams, regime: Regime) -> LambdaParams:
    """Move ``phi`` onto the degeneracy curve of M_A (or M_B) at fixed theta."""
    if regime is Regime.DegenerateA:
        phi = math.atan(SQRT3 * math.cos(p.theta))
    elif regime is Regime.DegenerateB:
        phi = math.atan(-SQRT3 * math.cos(p.theta))
    else:
        raise RegimeMismatch(f"no single degeneracy curve for {regime.value}")
    phi %= math.pi
    return LambdaParams(p.theta, 0.0 if phi >= math.pi else phi)


def assemble(a, q: ZQuad) -> np.ndarray:
    """Block matrix from A (B = -F2 - A) and the four z-parameters."""
    a = np.asarray(a, dtype=complex)
    b = -F2 - a
    z1 = z_block(q.z1, ZBlockKind.RowType)
    z2 = z_block(q.z2, ZBlockKind.RowType)
    z3 = z_block(q.z3, ZBlockKind.ColType)
    z4 = z_block(q.z4, ZBlockKind.ColType)
    return block_compose([
        [F2, z1, z2],
        [z3, z3 @ a @ z1 / 2, z3 @ b @ z2 / 2],
        [z4, z4 @ b @ z1 / 2, z4 @ a @ z2 / 2],
    ])


def _self_check(h: np.ndarray, tol: Tolerance, what: str) -> np.ndarray:
    report = is_hadamard(h, tol)
    if not report.is_hadamard:
        raise VerificationFailed(
            f"{what}: unimodular error {report.unimodular_error:.3e}, "
            f"unitarity error {report.unitarity_error:.3e}")
    return h


def _mismatch(regime: Regime, expected: str) -> RegimeMismatch:
    hint = {
        Regime.DegenerateA: "use build_degenerate (CLI: gen handles it)",
        Regime.DegenerateB: "use build_degenerate (CLI: gen handles it)",
        Regime.DoublyDegenerateTheta0: "use build_theta0_limit (CLI: gen-limit theta0)",
        Regime.DoublyDegenerateHalfPi: "use build_halfpi_limit (CLI: gen-limit halfpi)",
        Regime.Generic: "use build_matrix (CLI: gen)",
    }[regime]
    return RegimeMismatch(f"point is {regime.value}, expected {expected}; {hint}")


def solve_z_quad(fp: FamilyPoint, near_band: float = NEAR_DEGENERACY_BAND) -> ZQuad:
    regime = classify_regime(fp.lam, eps=near_band)
    if regime is not Regime.Generic:
        raise _mismatch(regime, "Generic")
    ma, mb = from_a(fp.lam), from_b(fp.lam)
    z1 = cmath.exp(1j * fp.psi1)
    s = z1 * z1
    z3s = apply(ma, s)
    z4s = apply(mb, s)
    z2s = apply_inverse(mb, z3s)
    return ZQuad.from_squares(z1, z2s, z3s, z4s)


def build_matrix(fp: FamilyPoint, signs: SignChoice = SignChoice(),
                 tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    q = signs.apply(solve_z_quad(fp))
    return _self_check(assemble(a_matrix(fp.lam), q), tol, f"build_matrix at {fp}")


def degenerate_z_quad(p: LambdaParams, free_param, anchor: Anchor = Anchor.Z1,
                      near_band: float = NEAR_DEGENERACY_BAND) -> ZQuad:
    """z-parameters when exactly one of M_A, M_B is degenerate.

    With M_A degenerate (image w0^2, preimage z0^2):
      anchor Z1: z1 free, z4^2 = M_B(z1^2), z3^2 = w0^2, z2^2 = z0^2
      anchor Z3: z3 free, z2^2 = M_B^-1(z3^2), z1^2 = z0^2, z4^2 = w0^2
    With M_B degenerate the roles of A and B (and of z3 and z4 in the
    fixed slots) are exchanged.
    """
    free = check_unimodular(free_param)
    regime = classify_regime(p, eps=near_band)
    ma, mb = from_a(p), from_b(p)
    if regime is Regime.DegenerateA:
        info = degeneracy_info(ma, eps=near_band)
        w0s, z0s = info.image, info.preimage
        if anchor is Anchor.Z1:
            return ZQuad.from_squares(free, z0s, w0s, apply(mb, free * free))
        z2 = principal_sqrt(apply_inverse(mb, free * free))
        return ZQuad(principal_sqrt(z0s), z2, free, principal_sqrt(w0s))
    if regime is Regime.DegenerateB:
        info = degeneracy_info(mb, eps=near_band)
        w0s, z0s = info.image, info.preimage
        if anchor is Anchor.Z1:
            return ZQuad.from_squares(free, z0s, apply(ma, free * free), w0s)
        z1 = principal_sqrt(apply_inverse(ma, free * free))
        return ZQuad(z1, principal_sqrt(z0s), free, principal_sqrt(w0s))
    raise _mismatch(regime, "DegenerateA or DegenerateB")


def build_degenerate(p: LambdaParams, free_param, anchor: Anchor = Anchor.Z1,
                     signs: SignChoice = SignChoice(), tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    q = signs.apply(degenerate_z_quad(p, free_param, anchor))
    return _self_check(assemble(a_matrix(p), q), tol, f"build_degenerate at {p}")


def theta0_z2_squared(phi: float, z1) -> complex:
    """Limit of z2^2 = M_A^-1(M_B(z1^2)) as theta -> 0 at fixed phi."""
    z1 = check_unimodular(z1)
    s = z1 * z1
    for bad in (OMEGA ** 2, OMEGA ** 4):
        if abs(s - bad) < DEFAULT_TOL.eps_scalar:
            raise ExceptionalDirection(f"z1^2 = {s} is an exceptional direction")
    e = cmath.exp(2j * phi)
    den = e * s + 1 + e
    if abs(den) < DEFAULT_TOL.eps_scalar:
        raise NearPole(f"limit denominator {abs(den):.3e}")
    return -e * ((1 + 1 / e) * s + 1 / e) / den


def theta0_limit_quad(phi: float, z1) -> ZQuad:
    check_angle("phi", phi)
    return ZQuad(z1, principal_sqrt(theta0_z2_squared(phi, z1)), 1, 1)


def build_theta0_limit(phi: float, z1, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Fourier-type member reached as theta -> 0 with z1 as free parameter."""
    q = theta0_limit_quad(phi, z1)
    return _self_check(assemble(a_matrix(LambdaParams(0.0, phi)), q), tol, "theta0 limit")


def theta0_z3_anchor_quad(z3, phi: float = 0.0) -> ZQuad:
    z3 = check_unimodular(z3)
    check_angle("phi", phi)
    if abs(z3 * z3 - 1) < DEFAULT_TOL.eps_scalar:
        e = cmath.exp(-2j * phi)
        z1s, z2s = OMEGA ** 2 * e, OMEGA * e
    else:
        z1s, z2s = OMEGA, OMEGA ** 2
    return ZQuad(principal_sqrt(z1s), principal_sqrt(z2s), z3, 1)


def build_theta0_z3_anchor(z3, phi: float = 0.0, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """theta -> 0 limit with z3 free: z1^2 -> w, z2^2 -> w^2, z4^2 -> 1 for z3^2 != 1."""
    q = theta0_z3_anchor_quad(z3, phi)
    return _self_check(assemble(a_matrix(LambdaParams(0.0, phi)), q), tol, "theta0 z3-anchored limit")


def halfpi_quad(q0: ZQuad) -> ZQuad:
    return ZQuad(q0.z3, q0.z4, q0.z1, q0.z2)


def build_halfpi_limit(phi: float, z, anchor: Anchor = Anchor.Z1,
                       tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Member at theta = pi/2, phi = 0 obtained from the theta = 0 limit.

    A(pi/2, 0) is the transpose of A(0, phi), so H(pi/2, 0; z3, z4, z1, z2)
    equals H(0; z1, z2, z3, z4) transposed. ``phi`` is the direction of
    approach of the underlying theta -> 0 limit.
    """
    q0 = theta0_limit_quad(phi, z) if anchor is Anchor.Z1 else theta0_z3_anchor_quad(z, phi)
    h = assemble(a_matrix(LambdaParams(math.pi / 2, 0.0)), halfpi_quad(q0))
    return _self_check(h, tol, "halfpi limit")
