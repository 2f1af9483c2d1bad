class HilbertForgeError(Exception):
    """Base class for all errors raised by hilbertforge."""


class ParseError(HilbertForgeError, ValueError):
    def __init__(self, message, token=None, line=None):
        self.token = token
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line!r}")
        if token is not None:
            where.append(f"token {token!r}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class EnumerationCapExceeded(HilbertForgeError):
    """An exhaustive enumeration would exceed the configured cap."""

    def __init__(self, what, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: {size} items exceeds enumeration cap {cap}")


class InsufficientData(HilbertForgeError, ValueError):
    pass


class OracleMismatch(HilbertForgeError):
    pass
