class PrimexpError(Exception):
    """Base class for every error raised by primexp."""
    pass


class DimensionError(PrimexpError):
    pass


class MatrixParseError(PrimexpError):
    """Matrix text did not conform to the matrix text format."""

    def __init__(self, line, message):
        super(MatrixParseError, self).__init__('line {0}: {1}'.format(line, message))
        self.line = line


class VertexError(PrimexpError):
    pass


class NotPrimitiveError(PrimexpError):
    pass


class UndefinedFrobeniusError(PrimexpError):
    pass


class ParameterError(PrimexpError):
    pass


class CycleCapError(PrimexpError):
    """An exact cycle profile was required but enumeration hit its cap."""
    pass


class TooManyCycleLengthsError(PrimexpError):
    pass


class OrderCapError(PrimexpError):
    pass


class FamilySpecError(PrimexpError):
    pass


class WorkerError(PrimexpError):
    """A verification worker stopped unexpectedly."""

    def __init__(self, message, original=None):
        super(WorkerError, self).__init__(message)
        self.original = original


class ConfigError(PrimexpError):
    pass
