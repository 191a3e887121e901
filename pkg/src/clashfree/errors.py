"""Exception types shared across the package."""


class ClashFreeError(Exception):
    """Base class for all errors raised by clashfree."""


class ParameterError(ClashFreeError, ValueError):
    """Invalid modulus, residue, or parameter combination."""


class ResourceError(ClashFreeError, RuntimeError):
    """An instance exceeds a configured size cap."""


class ConstructionError(ClashFreeError, RuntimeError):
    """The cycle walk broke one of its own invariants.

    This signals a bug in the move rule, never bad user input.
    """
