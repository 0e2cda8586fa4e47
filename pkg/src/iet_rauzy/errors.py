"""Exception hierarchy.

Every error raised by the library derives from :class:`IetError`.  The
``exit_code`` class attribute is what the command-line front end returns
when the error escapes a subcommand.
"""


class IetError(Exception):
    exit_code = 3


# -- input / parsing (exit 2) ------------------------------------------------

class ParseError(IetError):
    exit_code = 2

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: "
        elif column is not None:
            where = f"column {column}: "
        super().__init__(where + message)


class NonSquareFreeRadicand(IetError):
    exit_code = 2


class NegativeRadicand(IetError):
    exit_code = 2


class RadicandMismatch(IetError):
    exit_code = 2


class AlphabetMismatch(IetError):
    exit_code = 2


class NonPositiveLength(IetError):
    exit_code = 2


# -- domain errors (exit 3) --------------------------------------------------

class DivisionByZero(IetError, ZeroDivisionError):
    pass


class NonIntegralCoefficients(IetError):
    pass


class OutOfDomain(IetError):
    pass


class DegenerateTransformation(IetError):
    pass


class DecomposablePermutation(IetError):
    pass


class WordNotInLanguage(IetError):
    pass


class NotACodingMorphism(IetError):
    pass


# -- admissibility (exit 4) --------------------------------------------------

class NotAdmissible(IetError):
    exit_code = 4

    def __init__(self, message, interval=None, witness=None):
        self.interval = interval
        self.witness = witness
        super().__init__(message)


# -- connections / regularity (exit 5) ---------------------------------------

class ConnectionDetected(IetError):
    """An exact coincidence of boundary points: the transformation has a
    connection, so it is not regular.

    ``point`` is the coinciding boundary; ``step`` is the index of the failing
    induction step when raised from a sequence of inductions.
    """
    exit_code = 5

    def __init__(self, message, point=None, step=None):
        self.point = point
        self.step = step
        super().__init__(message)


class NotRegular(IetError):
    exit_code = 5

    def __init__(self, message, certificate=None):
        self.certificate = certificate
        super().__init__(message)


# -- budgets (exit 6) --------------------------------------------------------

class CapExceeded(IetError):
    exit_code = 6


class VertexBudgetExceeded(IetError):
    exit_code = 6
