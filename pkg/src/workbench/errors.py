"""Exception hierarchy shared by every module of the workbench."""


class WorkbenchError(Exception):
    """Base class for computation errors (CLI exit code 2)."""


class ConfigError(WorkbenchError):
    """Malformed or inconsistent analysis configuration (CLI exit code 1)."""

    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


# scalars
class DivisionByZero(WorkbenchError, ZeroDivisionError):
    pass


class MixedAlgebraicRelations(WorkbenchError):
    pass


class DenominatorVanishes(WorkbenchError):
    pass


# free algebra
class AlphabetMismatch(WorkbenchError):
    pass


class ParseError(WorkbenchError, SyntaxError):
    """Bad polynomial text; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")


class UnknownSymbol(ParseError):
    pass


# rewriting
class InvalidParams(WorkbenchError):
    pass


class IncompletePresentation(WorkbenchError):
    pass


class CompletionBudgetExceeded(WorkbenchError):
    pass


# groups and gradings
class NotAGroup(WorkbenchError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message if witness is None else f"{message}: {witness}")


class UnsupportedFamily(WorkbenchError):
    pass


class InvalidGrading(WorkbenchError):
    pass


# linear algebra
class WordOutsideAmbient(WorkbenchError):
    pass


class AmbientMismatch(WorkbenchError):
    pass


class SeriesDenominatorZeroConstant(WorkbenchError):
    pass
