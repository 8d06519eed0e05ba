"""Errors raised by the toolkit."""


class GoldbachError(Exception):
    """Base class for every error the toolkit raises on purpose."""


class DomainError(GoldbachError, ValueError):
    """An argument lies outside the domain where a formula is defined."""


class OutOfRangeError(GoldbachError, ValueError):
    """A query exceeds the limit of the table or subset it is asked of."""


class CapacityError(GoldbachError, MemoryError):
    """A request would exceed the configured memory budget."""


class UnsupportedSpecError(GoldbachError, ValueError):
    """A subset recipe that cannot be built."""


class UsageError(GoldbachError, ValueError):
    """Invalid combination of arguments (odd endpoints, bad tolerances, ...)."""


class NoRootError(GoldbachError, ArithmeticError):
    """The defining equation has no sign change on the search bracket."""


class NotFoundError(GoldbachError, LookupError):
    """A scan finished without finding what it was looking for."""


class CacheFormatError(GoldbachError, ValueError):
    """A prime cache or subset file is malformed."""
