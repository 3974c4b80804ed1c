"""Closed-form members of named order-6 families used as fixtures."""
from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import OutOfRange
from .mat_core import F2, block_compose
from .params import OMEGA, ZBlockKind, check_unimodular, z_block

OMEGA_MAT = np.diag([OMEGA, OMEGA ** 2])


def principal_sqrt(w: complex) -> complex:
    """Square root with argument in (-pi/2, pi/2].

    A tiny negative imaginary part on the negative real axis (roundoff)
    is treated as the axis itself, so sqrt(-1) is i on both sides.
    """
    arg = cmath.phase(w)
    if arg <= -math.pi + 1e-12:
        arg = math.pi
    return cmath.rect(math.sqrt(abs(w)), arg / 2)


def fourier(z1, z2) -> np.ndarray:
    """F6(2) representative [[F2, Z1, Z2], [F2, wZ1, w^2 Z2], [F2, w^2 Z1, wZ2]]."""
    a = z_block(z1, ZBlockKind.RowType)
    b = z_block(z2, ZBlockKind.RowType)
    w = OMEGA
    return block_compose([[F2, a, b], [F2, w * a, w ** 2 * b], [F2, w ** 2 * a, w * b]])


def fourier_transposed(z3, z4) -> np.ndarray:
    a = z_block(z3, ZBlockKind.ColType)
    b = z_block(z4, ZBlockKind.ColType)
    w = OMEGA
    return block_compose([[F2, F2, F2], [a, w * a, w ** 2 * a], [b, w ** 2 * b, w * b]])


def d6_member(z) -> np.ndarray:
    """One-parameter matrix at theta = arccos(1/sqrt 3), phi = pi/4 (D6(1) class)."""
    z = check_unimodular(z)
    zb = z.conjugate()
    i = 1j
    return np.array([
        [1, 1, 1, 1, 1, 1],
        [1, -1, z, -z, i, -i],
        [1, i, -z, z, -1, -i],
        [1, -i, i, i, -i, -1],
        [1, zb, -i, -1, -zb, i],
        [1, -zb, -1, -i, zb, i],
    ], dtype=complex)


def k6_z3(psi: float, eps: int = 1) -> complex:
    """z3 = z4 = (1 - i eps r) / (1 + i eps r) with r = sqrt(1 + 2 cos psi)."""
    r = math.sqrt(max(1.0 + 2.0 * math.cos(psi), 0.0))
    return (1 - 1j * eps * r) / (1 + 1j * eps * r)


def k6_subfamily_member(psi: float, eps: int = 1) -> np.ndarray:
    """One-parameter matrix on the M_A degeneracy curve (a K6(2) subfamily).

    ``psi`` must lie in [0, 2 pi/3]; ``eps`` is the sign in front of the
    square root and defaults to +1.
    """
    psi = float(psi)
    if not (0.0 <= psi <= 2 * math.pi / 3):
        raise OutOfRange(f"psi={psi!r} outside [0, 2pi/3]")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    z = cmath.exp(1j * psi)
    z3 = k6_z3(psi, eps)
    q = principal_sqrt(z3 * z)
    return np.array([
        [1, 1, 1, 1, 1, 1],
        [1, -1, z, -z, z, -z],
        [1, z3, z3 * z, z, -q, -q],
        [1, -z3, z3, -1, -q, q],
        [1, z3, -q, -q, z3 * z, z],
        [1, -z3, -q, q, z3, -1],
    ], dtype=complex)
