"""Fixed-order (2 and 6) complex matrix helpers and the matrix text format.

Matrices are plain ``numpy`` arrays of dtype ``complex128``; the helpers here
only check shape and finiteness and do the block bookkeeping.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import MatrixFormatError

F2 = np.array([[1, 1], [1, -1]], dtype=complex)
E2 = np.eye(2, dtype=complex)
E6 = np.eye(6, dtype=complex)


@dataclass(frozen=True)
class Tolerance:
    eps_unimodular: float = 1e-10
    eps_unitarity: float = 1e-9
    eps_scalar: float = 1e-10

    def __post_init__(self):
        for name in ("eps_unimodular", "eps_unitarity", "eps_scalar"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")
        if self.eps_unitarity < self.eps_unimodular:
            raise ValueError("eps_unitarity must be >= eps_unimodular")


DEFAULT_TOL = Tolerance()


def _as_square(m, n: int) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def as_mat2(m) -> np.ndarray:
    return _as_square(m, 2)


def as_mat6(m) -> np.ndarray:
    return _as_square(m, 6)


def mat2_mul(a, b) -> np.ndarray:
    return as_mat2(a) @ as_mat2(b)


def block_compose(blocks: Sequence[Sequence[np.ndarray]]) -> np.ndarray:
    """Assemble a 6x6 matrix from a 3x3 grid of 2x2 blocks.

    Entry ``(2*i + r, 2*j + c)`` of the result is entry ``(r, c)`` of
    ``blocks[i][j]``.
    """
    if len(blocks) != 3 or any(len(row) != 3 for row in blocks):
        raise ValueError("need a 3x3 grid of blocks")
    return np.block([[as_mat2(b) for b in row] for row in blocks])


def block_extract(h) -> list[list[np.ndarray]]:
    h = as_mat6(h)
    return [[h[2 * i:2 * i + 2, 2 * j:2 * j + 2].copy() for j in range(3)] for i in range(3)]


def dagger(m) -> np.ndarray:
    return np.conj(np.asarray(m, dtype=complex)).T


def unitarity_residual(h) -> float:
    """max(||H H^+ - 6E||_F, ||H^+ H - 6E||_F)."""
    h = as_mat6(h)
    hd = dagger(h)
    return float(max(np.linalg.norm(h @ hd - 6 * E6), np.linalg.norm(hd @ h - 6 * E6)))


def unimodular_error(h) -> float:
    return float(np.max(np.abs(np.abs(np.asarray(h)) - 1.0)))


# -- text format --------------------------------------------------------------
# 6 data lines, each with re,im pairs of the 6 row entries (12 floats),
# 17 significant digits, optional leading '#' comment lines.

def format_matrix(h, comments: Sequence[str] = ()) -> str:
    h = as_mat6(h)
    lines = [f"# {c}" for c in comments]
    for row in h:
        vals = []
        for z in row:
            vals.append(f"{z.real:.17g}")
            vals.append(f"{z.imag:.17g}")
        lines.append(" ".join(vals))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    rows = []
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if seen_data:
                raise MatrixFormatError(f"line {lineno}: comment after matrix data")
            continue
        seen_data = True
        fields = line.split()
        if len(fields) != 12:
            raise MatrixFormatError(f"line {lineno}: expected 12 floats, got {len(fields)}")
        try:
            vals = [float(f) for f in fields]
        except ValueError as exc:
            raise MatrixFormatError(f"line {lineno}: {exc}") from None
        if not all(math.isfinite(v) for v in vals):
            raise MatrixFormatError(f"line {lineno}: non-finite value")
        rows.append([complex(vals[2 * k], vals[2 * k + 1]) for k in range(6)])
    if len(rows) != 6:
        raise MatrixFormatError(f"expected 6 data lines, got {len(rows)}")
    return np.array(rows, dtype=complex)


def write_matrix(path, h, comments: Sequence[str] = ()) -> None:
    Path(path).write_text(format_matrix(h, comments))


def read_matrix(path) -> np.ndarray:
    return parse_matrix(Path(path).read_text())
