"""Exception hierarchy shared by every module."""


class TensorSpectraError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(TensorSpectraError, ValueError):
    """Operand shapes violate a product or structural constraint."""


class PreconditionError(TensorSpectraError, ValueError):
    """An input violates a documented precondition.

    ``code`` is a short stable identifier surfaced by the CLI.
    """

    code = "precondition"


class NormZeroError(PreconditionError):
    code = "norm-zero"


class NormOneError(PreconditionError):
    code = "norm-one"


class NotHermitianError(PreconditionError):
    code = "not-hermitian"


class NotSymmetricError(PreconditionError):
    code = "not-symmetric"


class NotRationalError(PreconditionError):
    code = "not-rational"


class OrthonormalityError(PreconditionError):
    code = "not-orthonormal"


class EliminationOrderError(PreconditionError):
    code = "elimination-order"


class EigenSolverError(TensorSpectraError):
    """The classical eigensolver failed to converge."""


class ParseError(TensorSpectraError, ValueError):
    """Malformed serialized input (tensor JSON, polynomial text, permutation)."""
