"""Exception hierarchy shared by every module."""


class BirotaryError(Exception):
    """Base class for all package errors."""


class DegreeMismatch(BirotaryError, ValueError):
    pass


class NotAPermutation(BirotaryError, ValueError):
    pass


class CapExceeded(BirotaryError):
    """A group has more elements than the materialization cap allows."""

    def __init__(self, name: str, cap: int, found: int | None = None):
        self.name = name
        self.cap = cap
        self.found = found
        msg = f"group {name or '<unnamed>'} exceeds materialization cap {cap}"
        if found is not None:
            msg += f" (order {found})"
        super().__init__(msg)


class NotNormal(BirotaryError):
    pass


class NotSolvable(BirotaryError):
    pass


class Solvable(BirotaryError):
    pass


class Abelian(BirotaryError):
    def __init__(self, message: str, tag: str | None = None):
        self.tag = tag
        super().__init__(message)


class NotFound(BirotaryError):
    pass


class NotPrimePower(BirotaryError, ValueError):
    pass


class InvalidAction(BirotaryError):
    pass


class NotInvolution(BirotaryError):
    pass


class NotGenerating(BirotaryError):
    pass


class DivisibilityViolation(BirotaryError):
    pass


class SideConditionViolated(BirotaryError):
    pass


class HallShapeUnmatched(BirotaryError):
    pass


class StructureViolation(BirotaryError):
    pass


class PreconditionFailed(BirotaryError):
    pass


class ParseError(BirotaryError, ValueError):
    pass


class UnknownSuite(BirotaryError):
    pass
