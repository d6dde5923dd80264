"""Exception types raised across the package."""


class MatroidResError(ValueError):
    """Base class for user-facing input errors."""


class ExchangeAxiomViolation(MatroidResError):
    def __init__(self, b1, b2, x):
        self.b1, self.b2, self.x = b1, b2, x
        super().__init__(
            f"basis exchange fails for B1={sorted(b1)}, B2={sorted(b2)}, x={x}"
        )


class EmptyBasisSet(MatroidResError):
    pass


class UnequalBasisSizes(MatroidResError):
    pass


class ContractDependentSet(MatroidResError):
    pass


class LoopPresent(MatroidResError):
    pass


class ZeroIdeal(MatroidResError):
    pass


class NotSquarefree(MatroidResError):
    pass


class NotBasicCover(MatroidResError):
    pass


class NotAGenerator(MatroidResError):
    pass


class NotASubPartition(MatroidResError):
    pass


class NotABasis(MatroidResError):
    pass


class IsMinimumGenerator(MatroidResError):
    pass


class HeightTooSmall(MatroidResError):
    pass


class SearchBoundExceeded(MatroidResError):
    pass


class SizeBoundExceeded(MatroidResError):
    pass


class TooFewGenerators(MatroidResError):
    pass


class SchemaError(MatroidResError):
    def __init__(self, message, pointer="/"):
        self.pointer = pointer
        super().__init__(f"{pointer}: {message}")


class DecompositionFailure(RuntimeError):
    """A computed object contradicts a proved structural identity.

    Raised only when the implementation is wrong, never for bad input.
    """
