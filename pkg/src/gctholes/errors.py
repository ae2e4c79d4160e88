class GuardError(ValueError):
    """A resource guard was exceeded; raise it explicitly to run anyway."""


class IntegralityError(ArithmeticError):
    """An exact computation that must yield a (nonnegative) integer did not.

    This always indicates an internal bug, never bad input.
    """
