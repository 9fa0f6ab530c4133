"""Exception types raised by the library."""


class JCRevivalError(Exception):
    """Base class for all library errors."""


class TruncationTooSmall(JCRevivalError, ValueError):
    """Fock truncation leaves more tail probability than the allowed bound."""


class DegenerateState(JCRevivalError, ValueError):
    """State recipe degenerates to the zero vector (e.g. odd cat at alpha=0)."""


class IndexOutOfRange(JCRevivalError, IndexError):
    """Fock index outside the truncated range of a mode."""


class UnsupportedArity(JCRevivalError, ValueError):
    """Operation defined only for a single field mode was given several."""


class NotNormalized(JCRevivalError, ValueError):
    """Probability vector does not sum to one within tolerance."""


class GridMismatch(JCRevivalError, ValueError):
    """Series grid cannot accommodate the requested time shift."""


class QuadratureDiverged(JCRevivalError, ArithmeticError):
    """Numerical back-projection failed its internal convergence check."""


class BesselOverflow(JCRevivalError, OverflowError):
    """Bessel argument above the documented double-precision limit."""


class ConfigError(JCRevivalError, ValueError):
    """Malformed run configuration; carries a line number when available."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
