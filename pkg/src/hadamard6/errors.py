"""Exception types raised across the package."""


class HadamardError(Exception):
    """Base class for all package errors."""


class DegenerateMap(HadamardError):
    """A Moebius map with |alpha| == |beta| was asked for a pointwise image."""


class NearPole(HadamardError):
    """The Moebius denominator vanishes at the requested point."""


class RegimeMismatch(HadamardError):
    """A builder was called at a parameter point outside its regime."""


class VerificationFailed(HadamardError):
    """A constructed matrix failed its own Hadamard self-check."""


class ExceptionalDirection(HadamardError):
    """z1**2 hits omega**2 or omega**4 in the theta -> 0 limit."""


class NotHadamard(HadamardError):
    """An operation requiring a Hadamard matrix received something else."""


class ZeroEntry(HadamardError):
    """Dephasing needs nonzero entries in the first row and column."""


class OutOfRange(HadamardError, ValueError):
    """An angle or scalar lies outside its admissible domain."""


class MatrixFormatError(HadamardError, ValueError):
    """A matrix text file could not be parsed."""
