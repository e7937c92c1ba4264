"""Exception hierarchy shared across the package."""


class CrossmapError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateElement(CrossmapError):
    """An element appears twice among the blocks of a partition."""


class OutOfRange(CrossmapError):
    """An integer argument lies outside its documented range."""


class EmptyBlock(CrossmapError):
    """A block with no elements was supplied."""


class InvalidK(CrossmapError):
    """The crossing/nesting order k is out of range."""


class TooManyArcs(CrossmapError):
    """The brute-force oracle refuses arc sets this large."""


class NotFull(CrossmapError):
    """The reverse map requires a partition with no absent elements."""


class TooLarge(CrossmapError):
    """The diagram renderer refuses ground sets this large."""


class OutOfBudget(CrossmapError):
    """A counting job exceeds the configured enumeration budget."""


class Overflow(CrossmapError):
    """An exact count left the signed 64-bit range."""


class UnknownId(CrossmapError):
    """No reference sequence with this OEIS identifier."""


class NetworkError(CrossmapError):
    """A b-file download failed and no cached copy exists."""


class ParseError(CrossmapError):
    """A b-file line does not match `index value`."""


class NoOverlap(CrossmapError):
    """A sequence comparison has no indices in common."""
