"""Exception hierarchy shared by all hassewitt modules."""


class CurveAlgebraError(Exception):
    """Base class for every error raised by this package."""


# -- field construction and arithmetic ------------------------------------

class NotPrime(CurveAlgebraError):
    pass


class ReducibleModulus(CurveAlgebraError):
    pass


class DegreeMismatch(CurveAlgebraError):
    pass


class FieldMismatch(CurveAlgebraError):
    pass


class DivisionByZero(CurveAlgebraError, ZeroDivisionError):
    pass


class FieldParseError(CurveAlgebraError):
    pass


# -- polynomials -----------------------------------------------------------

class RingMismatch(CurveAlgebraError):
    pass


class NotAPthPower(CurveAlgebraError):
    pass


class NotHomogeneous(CurveAlgebraError):
    pass


class ArityMismatch(CurveAlgebraError):
    pass


# -- cohomology / semilinear maps -------------------------------------------

class InconsistentBasis(CurveAlgebraError):
    pass


# -- plane curves ------------------------------------------------------------

class ZeroPartialFy(CurveAlgebraError):
    pass


class BasisEscape(CurveAlgebraError):
    """An image left the expected monomial basis; indicates a bug or a
    geometry violating the adjoint-basis assumption."""


class InsufficientPrecision(CurveAlgebraError):
    pass


# -- fermat ---------------------------------------------------------------

class UnsupportedCharacteristic(CurveAlgebraError):
    pass


class BasisVerificationFailed(CurveAlgebraError):
    pass


class ImageEscapesSpan(CurveAlgebraError):
    pass


# -- jacobian ---------------------------------------------------------------

class InconsistentInvariants(CurveAlgebraError):
    pass


# -- combinatorics ------------------------------------------------------------

class SearchSpaceTooLarge(CurveAlgebraError):
    pass


# -- parsing -------------------------------------------------------------

class PolySyntaxError(CurveAlgebraError):
    """Syntax error in polynomial text; carries the 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnboundIdentifier(CurveAlgebraError):
    def __init__(self, name):
        super().__init__(f"unbound identifier {name!r}")
        self.name = name
