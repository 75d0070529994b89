"""Exception hierarchy shared by every module."""


class QuivfixError(Exception):
    """Base class for library errors."""


class IdentityViolation(QuivfixError):
    """A mathematical identity that must hold failed; the CLI exits with code 2."""


# fields
class DivisionByZero(QuivfixError, ZeroDivisionError):
    pass


class FieldMismatch(QuivfixError, TypeError):
    pass


class InfiniteField(QuivfixError):
    pass


class WrongField(QuivfixError):
    pass


# quivers and data
class DanglingArrow(QuivfixError, ValueError):
    pass


class DuplicateId(QuivfixError, ValueError):
    pass


class ContravariantElement(QuivfixError):
    pass


class IncompatibleData(QuivfixError, ValueError):
    pass


class ZeroDimension(QuivfixError, ValueError):
    pass


class TooLarge(QuivfixError):
    pass


class InvalidAutomorphism(QuivfixError, ValueError):
    pass


# representations
class ShapeMismatch(QuivfixError, ValueError):
    pass


class IncompatibleDim(QuivfixError, ValueError):
    pass


# cohomology
class NotAModifyingFamily(QuivfixError, ValueError):
    pass


class NotInDelta(QuivfixError, ValueError):
    pass


class CocycleMismatch(QuivfixError, ValueError):
    pass


class NotFixed(QuivfixError):
    pass


class NotRegularlyStable(QuivfixError):
    pass


class RelationFailure(IdentityViolation):
    pass


# stability
class IsSemistable(QuivfixError):
    pass


class TieBreakViolation(IdentityViolation):
    pass


class NoModifyingFamilyForClass(IdentityViolation):
    pass


# symplectic
class NotStarAutomorphism(QuivfixError):
    pass


class Mismatch(IdentityViolation):
    pass


class NotInvolution(QuivfixError):
    pass


class NotInFiber(QuivfixError):
    pass


class NotStable(QuivfixError):
    pass
