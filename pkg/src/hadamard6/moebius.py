"""Moebius maps w = (alpha z - beta) / (conj(beta) z - conj(alpha)) on the unit circle.

The maps built from A and B relate the squared z-parameters of the family.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateMap, NearPole
from .mat_core import DEFAULT_TOL
from .params import LambdaParams, a_matrix, b_matrix, check_unimodular

DEGENERACY_EPS = 1e-10
# inside this band the quotient is too ill-conditioned for the generic path
NEAR_DEGENERACY_BAND = 1e-6


@dataclass(frozen=True)
class MoebiusMap:
    alpha: complex
    beta: complex

    def __post_init__(self):
        if self.alpha == 0 and self.beta == 0:
            raise ValueError("alpha and beta cannot both vanish")

    @property
    def discriminant(self) -> float:
        """|alpha|^2 - |beta|^2; zero exactly when the map is degenerate."""
        return abs(self.alpha) ** 2 - abs(self.beta) ** 2


@dataclass(frozen=True)
class DegeneracyInfo:
    degenerate: bool
    image: Optional[complex] = None
    preimage: Optional[complex] = None
    near_degenerate: bool = False


def from_a(p: LambdaParams) -> MoebiusMap:
    a = a_matrix(p)
    return MoebiusMap(complex(a[0, 1] ** 2), complex(a[0, 0] ** 2))


def from_b(p: LambdaParams) -> MoebiusMap:
    b = b_matrix(p)
    return MoebiusMap(complex(b[0, 1] ** 2), complex(b[0, 0] ** 2))


def _checked(m: MoebiusMap, z, eps: float) -> complex:
    if abs(m.discriminant) <= eps:
        raise DegenerateMap(f"|alpha|^2 - |beta|^2 = {m.discriminant:.3e}")
    return check_unimodular(z)


def apply(m: MoebiusMap, z, eps: float = DEGENERACY_EPS) -> complex:
    z = _checked(m, z, eps)
    den = m.beta.conjugate() * z - m.alpha.conjugate()
    if abs(den) <= DEFAULT_TOL.eps_scalar:
        raise NearPole(f"denominator {abs(den):.3e} at z={z}")
    return (m.alpha * z - m.beta) / den


def apply_inverse(m: MoebiusMap, w, eps: float = DEGENERACY_EPS) -> complex:
    w = _checked(m, w, eps)
    den = m.beta.conjugate() * w - m.alpha
    if abs(den) <= DEFAULT_TOL.eps_scalar:
        raise NearPole(f"denominator {abs(den):.3e} at w={w}")
    return (m.alpha.conjugate() * w - m.beta) / den


def degeneracy_info(m: MoebiusMap, eps: float = DEGENERACY_EPS,
                    near_band: float = NEAR_DEGENERACY_BAND) -> DegeneracyInfo:
    """Classify ``m``; a degenerate map sends the whole circle to ``image``
    and its inverse sends the whole circle to ``preimage``.

    ``image`` and ``preimage`` are projected onto the unit circle, which
    only matters inside the tolerance band.
    """
    d = abs(m.discriminant)
    if d > eps:
        return DegeneracyInfo(False, near_degenerate=d < near_band)
    if m.beta == 0:
        return DegeneracyInfo(True, near_degenerate=True)
    image = m.alpha / m.beta.conjugate()
    preimage = m.alpha.conjugate() / m.beta.conjugate()
    return DegeneracyInfo(True, image / abs(image), preimage / abs(preimage), True)


def commutation_defect(p: LambdaParams, z) -> float:
    """|M_B^-1(M_A(z^2)) - M_A^-1(M_B(z^2))|, which vanishes identically."""
    z2 = check_unimodular(z) ** 2
    ma, mb = from_a(p), from_b(p)
    return abs(apply_inverse(mb, apply(ma, z2)) - apply_inverse(ma, apply(mb, z2)))


def curve_a(p: LambdaParams) -> float:
    """sin(theta) (sin(phi) - sqrt(3) cos(theta) cos(phi)); M_A degenerates at its zeros.

    Equals ``from_a(p).discriminant / (2 sqrt 3)``.
    """
    return math.sin(p.theta) * (math.sin(p.phi) - math.sqrt(3) * math.cos(p.theta) * math.cos(p.phi))


def curve_b(p: LambdaParams) -> float:
    return math.sin(p.theta) * (math.sin(p.phi) + math.sqrt(3) * math.cos(p.theta) * math.cos(p.phi))
