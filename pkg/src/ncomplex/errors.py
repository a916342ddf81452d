"""Exception hierarchy shared by all modules."""


class NComplexError(Exception):
    """Base class for errors raised by this package."""


class PreconditionError(NComplexError, ValueError):
    """An input violates the documented precondition of an operation."""


class MembershipError(PreconditionError):
    """A tensor does not lie in the symmetry-type subspace it should."""


class NotClosedError(PreconditionError):
    """A tensor required to be annihilated by a power of d is not."""


class InvariantViolation(NComplexError, RuntimeError):
    """Something that must hold mathematically failed; indicates a bug."""
