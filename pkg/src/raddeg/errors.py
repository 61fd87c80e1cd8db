"""Exception types shared across the library."""


class RaddegError(Exception):
    """Base class for all library errors."""


class FieldError(RaddegError):
    pass


class DimensionMismatch(RaddegError):
    pass


class AssociativityViolation(RaddegError):
    def __init__(self, i, j, k):
        super().__init__(f"associativity fails on basis triple ({i}, {j}, {k})")
        self.triple = (i, j, k)


class UnitViolation(RaddegError):
    def __init__(self, i):
        super().__init__(f"unit law fails on basis element {i}")
        self.index = i


class NotAdmissible(RaddegError):
    pass


class ResourceLimit(RaddegError):
    pass


class ActionViolation(RaddegError):
    """A module action or morphism matrix fails the defining identities."""


class NotNakayama(RaddegError):
    pass


class NotTypeA(RaddegError):
    pass


class NotIndecomposable(RaddegError):
    pass


class NotIrreducible(RaddegError):
    """The morphism does not have depth exactly one."""


class DecompositionError(RaddegError):
    """Raised when a direct-sum splitting cannot be completed or certified."""


class InvariantViolation(RaddegError):
    pass


class RepInfiniteSuspected(RaddegError):
    pass


class IsProjective(RaddegError):
    pass


class IsInjective(RaddegError):
    pass


class ZeroMorphism(RaddegError):
    pass


class CertificationFailed(RaddegError):
    pass


class SearchExhausted(RaddegError):
    pass


class WorkspaceError(RaddegError):
    """Parse or validation failure in a workspace file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
