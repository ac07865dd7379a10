"""Exception hierarchy shared by all hamseq modules."""


class HamseqError(ValueError):
    """Base class for every error raised by this package."""


class InvalidDegree(HamseqError):
    pass


class TooSmall(HamseqError):
    pass


class InvalidParams(HamseqError):
    pass


class LengthMismatch(HamseqError):
    pass


class ShapeMismatch(HamseqError):
    pass


class InvalidEdge(HamseqError):
    pass
