"""Exception hierarchy.

Three families are distinguished because the command-line front end maps
them to different exit statuses:

* ``ParseError`` -- malformed input text (exit 2);
* ``PreconditionError`` -- an operation was called outside its domain,
  e.g. a non-square matrix where a square one is required (exit 3);
* ``NonExistence`` -- a well-posed question whose mathematical answer is
  "no such object" and which carries a payload explaining why (exit 4).

Operations whose only non-existence information is "absent" return ``None``
instead of raising.
"""


class AlgSpecError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 3


class PreconditionError(AlgSpecError):
    exit_code = 3


class DivisionByZero(PreconditionError, ZeroDivisionError):
    pass


class FieldMismatch(PreconditionError, TypeError):
    pass


class ZeroPolynomial(PreconditionError):
    pass


class NotSquare(PreconditionError):
    pass


class ShapeMismatch(PreconditionError):
    pass


class NotMonic(PreconditionError):
    pass


class ZeroLambda(PreconditionError):
    pass


class NotCommuting(PreconditionError):
    pass


class EmptyFamily(PreconditionError):
    pass


class EmptySampleSet(PreconditionError):
    pass


class InvalidFamily(PreconditionError):
    pass


class ProductsNotInIdeal(PreconditionError):
    pass


class DegreeExceedsWeight(PreconditionError):
    pass


class NonRegular(PreconditionError):
    """The pencil's determinant vanishes identically, so its spectrum is all of F."""


class DomainTooLarge(PreconditionError):
    pass


class ZeroQuaternion(PreconditionError):
    pass


class NotAFactorization(PreconditionError):
    pass


class Unsupported(PreconditionError):
    pass


class InvariantViolation(PreconditionError):
    """A value violates a construction invariant (e.g. a Moebius determinant != 1)."""


class ParseError(AlgSpecError):
    exit_code = 2

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column or 1}: {message}"
        super().__init__(message)


class NonExistence(AlgSpecError):
    exit_code = 4


class CannotFactor(NonExistence):
    def __init__(self, reason, residual=None, roots=()):
        self.reason = reason
        self.residual = residual
        self.roots = tuple(roots)
        super().__init__(reason)


class NotSpectrallyDisjoint(NonExistence):
    def __init__(self, gcd):
        self.gcd = gcd
        super().__init__(f"minimum polynomials share the factor {gcd}")


class NotSolvable(NonExistence):
    def __init__(self, message, consistent=None):
        self.consistent = consistent
        super().__init__(message)


class NoFactorization(NonExistence):
    def __init__(self, message, residual=None, forced=None):
        self.residual = residual
        self.forced = forced
        super().__init__(message)


class NotFound(NonExistence):
    pass


class CertificationError(AlgSpecError):
    """A post-condition self-check failed.

    This indicates a bug: every certified identity is a theorem.
    """

    exit_code = 1


class InconsistentSidedness(CertificationError):
    pass


class TheoremViolated(CertificationError):
    pass
