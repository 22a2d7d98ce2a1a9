"""Exception hierarchy shared by every module.

The CLI maps ``UsageError`` subclasses to exit code 2 and every other
``CubicDetError`` to exit code 1.
"""


class CubicDetError(Exception):
    """Base class for all library errors."""


class UsageError(CubicDetError):
    """Bad user input: parse failures, malformed field specs, etc."""


# field
class NotPrime(UsageError):
    pass


class ReducibleModulus(UsageError):
    pass


class BadFieldLiteral(UsageError):
    pass


class CtxMismatch(CubicDetError):
    pass


class DivisionByZero(CubicDetError, ZeroDivisionError):
    pass


class RationalCtx(CubicDetError):
    """Operation only defined over finite fields."""


class CapExceeded(CubicDetError):
    """An exhaustive enumeration would exceed the configured size cap."""


# forms
class FormSyntaxError(UsageError):
    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        if text:
            message = f"{message} at column {pos + 1}\n  {text}\n  {' ' * pos}^"
        super().__init__(message)


class NotHomogeneous(UsageError):
    pass


class SingularTransform(CubicDetError):
    pass


# curve
class Singular(CubicDetError):
    def __init__(self, message, witness=None, field=None):
        super().__init__(message)
        self.witness = witness
        self.field = field


class WrongDegree(UsageError):
    pass


class PointNotOnCurve(CubicDetError):
    pass


class FormVanishesOnCurve(CubicDetError):
    pass


class NotNormalized(CubicDetError):
    pass


# linsys
class UnsupportedDegree(CubicDetError):
    pass


class DivisorNotOnCurve(CubicDetError):
    pass


class PointEqualsBase(CubicDetError):
    pass


class DimensionAnomaly(CubicDetError):
    pass


# detrep
class LambdaZero(CubicDetError):
    pass


class NotARepresentation(CubicDetError):
    def __init__(self, message, monomial=None):
        super().__init__(message)
        self.monomial = monomial


class BadCharacteristic(CubicDetError):
    pass


class PointAtInfinity(CubicDetError):
    pass


class IdentityFailure(CubicDetError):
    pass


# equiv
class RankAnomaly(CubicDetError):
    pass


class EffectiveClass(CubicDetError):
    pass


class FieldTooLarge(CubicDetError):
    pass


# census
class UnsupportedField(UsageError):
    pass
