"""Exception types shared across the package."""


class MosaicError(Exception):
    """Base class for all errors raised by this package."""


class SymbolSyntaxError(MosaicError, ValueError):
    """Raised for text that cannot be read as a Schläfli symbol."""


class SymbolDomainError(MosaicError, ValueError):
    """Raised for structurally valid input that violates a value constraint."""


class UnsupportedSymbolError(MosaicError, ValueError):
    """Raised when a symbol falls outside the supported geometry classes."""


class DominantRootAmbiguityError(MosaicError, ArithmeticError):
    """Raised when no unique root of maximal modulus exists."""


class InternalConsistencyError(MosaicError, RuntimeError):
    """Raised when a structural invariant of the computation is violated."""


class CellBudgetError(MosaicError, RuntimeError):
    """Raised when an explicit tiling construction exceeds its cell budget."""
