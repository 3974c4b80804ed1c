"""Raw ingredients of the standard form: Lambda(theta, phi), A and B, Z-blocks."""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import OutOfRange
from .mat_core import DEFAULT_TOL, E2, F2, as_mat2, dagger

SQRT3 = math.sqrt(3.0)
OMEGA = cmath.exp(2j * math.pi / 3)


def check_angle(name: str, value: float) -> float:
    value = float(value)
    if not (0.0 <= value < math.pi):
        raise OutOfRange(f"{name}={value!r} outside [0, pi)")
    return value


@dataclass(frozen=True)
class LambdaParams:
    theta: float
    phi: float

    def __post_init__(self):
        check_angle("theta", self.theta)
        check_angle("phi", self.phi)


@dataclass(frozen=True)
class ABPair:
    a_mat: np.ndarray
    b_mat: np.ndarray

    # the inner blocks c and d reuse these: C = B, D = A
    @property
    def c_mat(self) -> np.ndarray:
        return self.b_mat

    @property
    def d_mat(self) -> np.ndarray:
        return self.a_mat


class ZBlockKind(enum.Enum):
    RowType = "row"  # Z1, Z2: [[1, 1], [z, -z]]
    ColType = "col"  # Z3, Z4: [[1, z], [1, -z]]


def check_unimodular(z, eps: float = DEFAULT_TOL.eps_unimodular) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)) or abs(abs(z) - 1.0) >= eps:
        raise OutOfRange(f"|z| = {abs(z)!r} is not 1 (eps={eps})")
    return z


def lambda_matrix(p: LambdaParams) -> np.ndarray:
    c, s = math.cos(p.theta), math.sin(p.theta)
    e = cmath.exp(1j * p.phi)
    return np.array([[c, e * s], [e.conjugate() * s, -c]], dtype=complex)


def ab_from_lambda(lam, eps: float = DEFAULT_TOL.eps_scalar) -> ABPair:
    """A = F2(-e/2 + i sqrt(3)/2 Lambda), B = F2(-e/2 - i sqrt(3)/2 Lambda).

    ``lam`` must be self-adjoint and unitary; ``Lambda = +-e`` is accepted.
    """
    lam = as_mat2(lam)
    if np.abs(lam - dagger(lam)).max() > eps:
        raise OutOfRange("Lambda is not self-adjoint")
    if np.abs(lam @ dagger(lam) - E2).max() > eps:
        raise OutOfRange("Lambda is not unitary")
    a = F2 @ (-0.5 * E2 + 0.5j * SQRT3 * lam)
    b = F2 @ (-0.5 * E2 - 0.5j * SQRT3 * lam)
    return ABPair(a, b)


def lambda_from_ab(ab: ABPair) -> np.ndarray:
    return -1j * F2 @ (ab.a_mat - ab.b_mat) / (2 * SQRT3)


def a_entries(p: LambdaParams) -> tuple[complex, complex]:
    """Closed-form (A11, A12); the full A is [[A11, A12], [conj A12, -conj A11]]."""
    c, s = math.cos(p.theta), math.sin(p.theta)
    a11 = -0.5 + 0.5j * SQRT3 * (c + cmath.exp(-1j * p.phi) * s)
    a12 = -0.5 + 0.5j * SQRT3 * (-c + cmath.exp(1j * p.phi) * s)
    return a11, a12


def a_matrix(p: LambdaParams) -> np.ndarray:
    a11, a12 = a_entries(p)
    return np.array([[a11, a12], [a12.conjugate(), -a11.conjugate()]], dtype=complex)


def b_matrix(p: LambdaParams) -> np.ndarray:
    return -F2 - a_matrix(p)


def z_block(z, kind: ZBlockKind) -> np.ndarray:
    z = check_unimodular(z)
    if kind is ZBlockKind.RowType:
        return np.array([[1, 1], [z, -z]], dtype=complex)
    return np.array([[1, z], [1, -z]], dtype=complex)
