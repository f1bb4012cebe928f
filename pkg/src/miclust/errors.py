"""Exception hierarchy shared by all modules."""


class MiclustError(Exception):
    """Base class for all errors raised by this package."""


class DataError(MiclustError):
    """Invalid input data (parse failures, non-finite values, shape problems)."""


class ParseError(DataError):
    """Tabular text could not be parsed; carries 1-based row/column context."""

    def __init__(self, message, row=None, column=None):
        super().__init__(message)
        self.row = row
        self.column = column


class NumericalError(MiclustError):
    """Numerical degeneracy that could not be repaired."""


class FitError(NumericalError):
    """Maximum-likelihood fitting failed (e.g. every EM start degenerated)."""
