"""Exception hierarchy."""


class CosetLabError(Exception):
    """Base class for all library errors."""


class DegreeMismatchError(CosetLabError, ValueError):
    pass


class CycleParseError(CosetLabError, ValueError):
    pass


class NotASubgroupError(CosetLabError, ValueError):
    pass


class NotNormalError(CosetLabError, ValueError):
    pass


class MembershipError(CosetLabError, ValueError):
    """An element that must lie in the ambient group does not."""


class ClosureCapExceeded(CosetLabError, RuntimeError):
    pass


class IndexConditionError(CosetLabError, ValueError):
    pass


class InvariantViolation(CosetLabError, AssertionError):
    """A structural guarantee failed; indicates a bug, never bad input."""
