"""Exception types raised across the package."""


class FlagSchurError(Exception):
    pass


class NotADescent(FlagSchurError, ValueError):
    pass


class CapExceeded(FlagSchurError):
    pass


class NonzeroConstantTerm(FlagSchurError, ValueError):
    pass


class NotClear(FlagSchurError, ValueError):
    pass


class NotTransparent(FlagSchurError, ValueError):
    pass


class NotTranslucent(FlagSchurError, ValueError):
    pass


class TooLarge(FlagSchurError):
    """An oracle instance exceeded the configured filling or term caps."""


class ParseError(FlagSchurError, ValueError):
    pass


class InternalError(FlagSchurError, AssertionError):
    """An exact division left a remainder; always a bug, never user error."""
