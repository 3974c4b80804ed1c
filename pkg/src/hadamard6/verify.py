"""Hadamard checks, dephasing, H2-reducibility and equivalence testing."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import NotHadamard, ZeroEntry
from .mat_core import DEFAULT_TOL, Tolerance, as_mat6, unimodular_error, unitarity_residual

PERMS6 = np.array(list(itertools.permutations(range(6))), dtype=np.intp)

# dephasing both sides compounds roundoff, so compare looser than construction
EQUIV_ATOL = 1e-8
FINGERPRINT_DECIMALS = 6


@dataclass(frozen=True)
class HadamardReport:
    unimodular_error: float
    unitarity_error: float
    is_hadamard: bool


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of :func:`are_equivalent`.

    When ``equivalent``, ``h2 == diag(row_phases) @ h1[row_perm][:, col_perm] @ diag(col_phases)``
    up to ``max_entry_error``.
    """
    equivalent: bool
    row_perm: Optional[tuple[int, ...]] = None
    col_perm: Optional[tuple[int, ...]] = None
    max_entry_error: float = math.inf
    row_phases: Optional[np.ndarray] = None
    col_phases: Optional[np.ndarray] = None


@dataclass(frozen=True)
class Fingerprint:
    values: tuple[float, ...]

    def matches(self, other: "Fingerprint", atol: float = 10.0 ** -FINGERPRINT_DECIMALS) -> bool:
        # sorted vectors move by at most the per-entry perturbation, so an
        # elementwise comparison cannot split on a rounding boundary
        a, b = np.asarray(self.values), np.asarray(other.values)
        return a.shape == b.shape and bool(np.all(np.abs(a - b) <= atol))


def is_hadamard(h, tol: Tolerance = DEFAULT_TOL) -> HadamardReport:
    h = as_mat6(h)
    ue = unimodular_error(h)
    re = unitarity_residual(h)
    return HadamardReport(ue, re, ue < tol.eps_unimodular and re < tol.eps_unitarity)


def _require_hadamard(h, tol: Tolerance) -> np.ndarray:
    h = as_mat6(h)
    report = is_hadamard(h, tol)
    if not report.is_hadamard:
        raise NotHadamard(f"unimodular error {report.unimodular_error:.3e}, "
                          f"unitarity error {report.unitarity_error:.3e}")
    return h


def _dephase_stack(h: np.ndarray) -> np.ndarray:
    # works on (..., 6, 6); r_ij = h_ij h_00 / (h_i0 h_0j) for unimodular h
    return h * h[..., 0:1, 0:1] / (h[..., :, 0:1] * h[..., 0:1, :])


def dephase(h) -> np.ndarray:
    """Equivalent matrix with first row and column exactly 1."""
    h = as_mat6(h)
    if np.min(np.abs(h[0])) == 0 or np.min(np.abs(h[:, 0])) == 0:
        raise ZeroEntry("first row or column has a zero entry")
    # unit phases only, so the result is D2 h D1 with unitary diagonals
    col = h[0] / np.abs(h[0])
    row = h[:, 0] / np.abs(h[:, 0])
    r = h * (col[0] / (row[:, None] * col[None, :]))
    r[0, :] = 1
    r[:, 0] = 1
    return r


def submatrix_is_hadamard(h, rows: tuple[int, int], cols: tuple[int, int],
                          tol: Tolerance = DEFAULT_TOL) -> bool:
    (i, l), (j, k) = rows, cols
    if i == l or j == k:
        raise ValueError("row and column pairs must be distinct indices")
    h = np.asarray(h, dtype=complex)
    sub = h[np.ix_([i, l], [j, k])]
    if unimodular_error(sub) >= tol.eps_unimodular:
        return False
    return abs(np.vdot(sub[1], sub[0])) < tol.eps_unitarity


def _hadamard_pair_scan(h: np.ndarray, tol: Tolerance) -> bool:
    # |h_ij conj(h_lj) + h_ik conj(h_lk)| over all row pairs i<l, col pairs j<k
    g = h[:, None, :] * np.conj(h[None, :, :])  # g[i, l, j] = h_ij conj(h_lj)
    iu = np.triu_indices(6, 1)
    g = g[iu]  # (15, 6)
    s = np.abs(g[:, :, None] + g[:, None, :])[:, iu[0], iu[1]]
    return bool(np.any(s < tol.eps_unitarity))


def dephased_contains_minus_one(h, tol: Tolerance = DEFAULT_TOL) -> bool:
    return bool(np.any(np.abs(dephase(h) + 1) < tol.eps_unimodular))


def h2_reducible(h, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff some 2x2 submatrix (225 candidates) is Hadamard."""
    h = _require_hadamard(h, tol)
    return _hadamard_pair_scan(h, tol)


def fingerprint(h, tol: Tolerance = DEFAULT_TOL) -> Fingerprint:
    """Sorted |arg| of h_ij h_kl conj(h_il) conj(h_kj) over i<k, j<l.

    Relabeling rows or columns can conjugate a product, so the absolute
    phase is what survives all equivalence operations.
    """
    h = _require_hadamard(h, tol)
    i, k = np.triu_indices(6, 1)
    j, l = i, k
    q = (h[i][:, j] * h[k][:, l] * np.conj(h[i][:, l]) * np.conj(h[k][:, j]))
    phases = np.sort(np.abs(np.angle(q)).ravel())
    return Fingerprint(tuple(np.round(phases, FINGERPRINT_DECIMALS).tolist()))


def _diagonal_witness(h1, h2, row_perm, col_perm):
    x = h1[list(row_perm)][:, list(col_perm)]
    col_phases = h2[0] / x[0]
    row_phases = h2[:, 0] / (x[:, 0] * col_phases[0])
    err = float(np.abs(row_phases[:, None] * x * col_phases[None, :] - h2).max())
    return row_phases, col_phases, err


def are_equivalent(h1, h2, tol: Tolerance = DEFAULT_TOL, use_fingerprint: bool = True,
                   atol: float = EQUIV_ATOL) -> EquivalenceReport:
    """Exhaustive test of h2 = D2 P2 h1 P1 D1 over all 720 x 720 permutation pairs.

    For each row permutation every column permutation is checked at once;
    the witness is the lexicographically first (row, col) pair that matches.
    A fingerprint mismatch is a certificate of inequivalence and skips the
    search.
    """
    h1 = _require_hadamard(h1, tol)
    h2 = _require_hadamard(h2, tol)
    if use_fingerprint and not fingerprint(h1, tol).matches(fingerprint(h2, tol)):
        return EquivalenceReport(False)
    target = dephase(h2)
    best = math.inf
    for rp in PERMS6:
        stack = h1[rp][:, PERMS6].transpose(1, 0, 2)  # (720, 6, 6), one per col perm
        err = np.abs(_dephase_stack(stack) - target).max(axis=(1, 2))
        hit = int(np.argmax(err < atol))
        if err[hit] < atol:
            row_perm, col_perm = tuple(int(v) for v in rp), tuple(int(v) for v in PERMS6[hit])
            rph, cph, e = _diagonal_witness(h1, h2, row_perm, col_perm)
            return EquivalenceReport(True, row_perm, col_perm, e, rph, cph)
        best = min(best, float(err.min()))
    return EquivalenceReport(False, max_entry_error=best)


def perm_cycles(perm) -> str:
    """Cycle notation, 0-based, fixed points omitted; '()' for the identity."""
    seen = set()
    out = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cyc = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        out.append("(" + " ".join(str(c) for c in cyc) + ")")
    return "".join(out) or "()"
