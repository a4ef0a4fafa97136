"""Exception hierarchy shared by the encoders, the file format and the CLI."""


class WomError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(WomError, ValueError):
    """A message, parameter record or image failed a precondition."""


class WriteOnceViolation(ValidationError):
    """A write would clear a cell that is already set."""


class NoSolution(WomError):
    """A constrained GF(2) system has no solution."""


class NoGoodMatrix(WomError):
    """No matrix in the ensemble is good for the requested column sets."""


class FormatError(WomError):
    """The bytes do not form a valid memory image."""


class BadMagic(FormatError):
    pass


class BadVersion(FormatError):
    pass


class TruncatedFile(FormatError):
    pass


class ParamOutOfRange(FormatError):
    pass
