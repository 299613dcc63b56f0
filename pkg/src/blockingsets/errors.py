"""Exception hierarchy shared by all modules."""


class GeometryError(ValueError):
    """Base class for every error raised by this package."""


class NonPrime(GeometryError):
    pass


class NotPrimePower(GeometryError):
    pass


class TooLarge(GeometryError):
    pass


class FieldMismatch(GeometryError):
    pass


class DivisionByZero(GeometryError, ZeroDivisionError):
    pass


class NotSquareOrder(GeometryError):
    pass


class EqualPoints(GeometryError):
    pass


class NonUniformBlocks(GeometryError):
    pass


class NonConstantLambda(GeometryError):
    pass


class IndexOutOfRange(GeometryError, IndexError):
    pass


class NotEqualityCase(GeometryError):
    pass


class NotBlocking(GeometryError):
    pass


class NotMinimalBlocking(GeometryError):
    pass


class NotSymmetric(GeometryError):
    pass


class OutOfRange(GeometryError):
    pass


class TOutOfRange(OutOfRange):
    pass


class NotAchievable(GeometryError):
    pass


class ParseError(GeometryError):
    pass


class GeometryMismatch(GeometryError):
    pass
