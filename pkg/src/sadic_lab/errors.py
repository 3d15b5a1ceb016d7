"""Exception types shared across the package."""


class SadicError(Exception):
    pass


class InputError(SadicError, ValueError):
    """Malformed input or violated precondition on the caller side."""


class HorizonError(SadicError):
    """A finite horizon (language length, window size) is too small."""

    def __init__(self, message, needed=None):
        super().__init__(message)
        self.needed = needed


class PreconditionError(InputError):
    pass


class WellDefinednessError(InputError):
    pass


class AmbiguityError(InputError):
    pass


class InfiniteParsesError(SadicError):
    """The point has infinitely many eventually periodic representations."""
