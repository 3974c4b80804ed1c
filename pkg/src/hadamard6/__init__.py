"""Three-parameter family of H2-reducible complex Hadamard matrices of order 6."""
from .errors import (
    DegenerateMap,
    ExceptionalDirection,
    HadamardError,
    MatrixFormatError,
    NearPole,
    NotHadamard,
    OutOfRange,
    RegimeMismatch,
    VerificationFailed,
    ZeroEntry,
)
from .families import d6_member, fourier, fourier_transposed, k6_subfamily_member
from .family import (
    Anchor,
    FamilyPoint,
    Regime,
    SignChoice,
    ZQuad,
    build_degenerate,
    build_halfpi_limit,
    build_matrix,
    build_theta0_limit,
    build_theta0_z3_anchor,
    classify_regime,
    solve_z_quad,
)
from .mat_core import Tolerance, read_matrix, write_matrix
from .params import LambdaParams
from .verify import are_equivalent, dephase, fingerprint, h2_reducible, is_hadamard

__version__ = "0.1.0"
