"""Exception hierarchy shared by all modules."""


class SingknotError(Exception):
    """Base class for every error raised by this package."""


class DiagramError(SingknotError):
    """Invalid diagram source or structure."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedLine(DiagramError):
    pass


class EdgeMultiplicity(DiagramError):
    pass


class OrientationConflict(DiagramError):
    pass


class NonPlanar(DiagramError):
    pass


class SplitDiagram(DiagramError):
    pass


class PreconditionError(SingknotError):
    """An operation was called on an input outside its domain."""


class NotLong(PreconditionError):
    pass


class StaleSite(PreconditionError):
    pass


class ArityMismatch(PreconditionError):
    pass


class NegativeExponentAtZero(PreconditionError):
    pass


class PatternOverflow(SingknotError):
    pass


class PolyParseError(SingknotError):
    pass
