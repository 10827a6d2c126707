"""Exception types raised across the package."""


class RiordanError(Exception):
    """Base class for every error raised by riordanembed."""


class DivisionByNonUnit(RiordanError, ZeroDivisionError):
    pass


class CompositionByUnit(RiordanError, ValueError):
    pass


class NotReversible(RiordanError, ValueError):
    pass


class NoSquareRoot(RiordanError, ValueError):
    pass


class OrderExceeded(RiordanError, IndexError):
    """A coefficient beyond the known truncation order was requested."""


class InvariantViolation(RiordanError, ValueError):
    """A value does not satisfy the structural invariants of its type."""


class NotEmbeddable(RiordanError, ValueError):
    def __init__(self, message, index=None, coefficient=None, order_checked=None):
        super().__init__(message)
        self.index = index
        self.coefficient = coefficient
        self.order_checked = order_checked


class ShapeMismatch(RiordanError, ValueError):
    pass


class SizeExceeded(RiordanError, ValueError):
    pass


class NotUnitTriangular(RiordanError, ValueError):
    pass


class GFSyntaxError(RiordanError, SyntaxError):
    """Parse failure in a generating-function expression.

    ``offset`` is the 0-based character position and ``expected`` the set of
    tokens that would have been accepted there.
    """

    def __init__(self, message, text="", offset=0, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        self.source = text
        if self.expected:
            message = "%s at offset %d (expected one of: %s)" % (
                message, offset, ", ".join(sorted(self.expected)))
        else:
            message = "%s at offset %d" % (message, offset)
        super().__init__(message)


class NetworkUnavailable(RiordanError, OSError):
    pass


class MalformedResponse(RiordanError, ValueError):
    pass
