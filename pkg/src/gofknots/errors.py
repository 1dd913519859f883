"""Exception types shared across the package."""


class GofError(ValueError):
    """A well-formed request that has no valid answer (bad determinant,
    non-canonical lens space, unknown template, ...)."""


class ParseError(GofError):
    """Malformed text input. ``offset`` is a byte offset into the UTF-8 input."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset
