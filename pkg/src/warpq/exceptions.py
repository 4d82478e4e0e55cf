"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """Raised when an exhaustive computation would exceed its size cap."""


class ParseError(ValueError):
    """Raised on malformed dataset files; carries the offending line number."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}: "
        elif path is not None:
            where += " "
        super().__init__(where + message)
