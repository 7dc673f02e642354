"""Exception types shared across the package."""


class NotPrimeError(ValueError):
    """Field characteristic is not prime."""


class ReducibleModulusError(ValueError):
    """Supplied modulus polynomial factors over F_p."""


class DegreeMismatchError(ValueError):
    """Modulus polynomial is not monic of the requested degree."""


class DimensionMismatchError(ValueError):
    """Vectors of unequal dimension, or an operation restricted to d=3."""


class ZeroTError(ValueError):
    """The target dot-product value t must be nonzero."""


class ZeroNormalError(ValueError):
    """A plane normal vector must be nonzero."""


class DuplicateIndicesError(ValueError):
    """A candidate shattering set repeats an index."""


class BudgetExceededError(RuntimeError):
    """Exhaustive subset enumeration would exceed the configured budget."""


class SizeOutOfRangeError(ValueError):
    """Requested sample size outside [1, q^d]."""


class PointParseError(ValueError):
    """Malformed point file; carries 1-based line and column."""

    def __init__(self, message, line, column=None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


class DuplicatePointError(ValueError):
    """A point set must be duplicate-free."""


class ValueOutOfRangeError(ValueError):
    """A coordinate or element encoding outside [0, q)."""


class InvalidConfigError(ValueError):
    """Sweep configuration violates its invariants."""
