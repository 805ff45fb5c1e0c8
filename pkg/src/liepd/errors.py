"""Exception hierarchy shared by the library and the command line."""


class LiePDError(Exception):
    """Base class for all errors raised by liepd."""


class DomainError(LiePDError, ArithmeticError):
    """Field operation outside its domain (inverting zero)."""


class ContextError(LiePDError, ValueError):
    """Operands live over different alphabets, fields or targets."""


class SortError(LiePDError, TypeError):
    """An L-sorted value was used where a V-sorted one is required, or vice versa."""

    def __init__(self, message, subterm=None):
        super().__init__(message)
        self.subterm = subterm


class RankError(LiePDError, ValueError):
    """A free representation with |X| != |Y| was used where one in Xi' is required."""


class ValidationError(LiePDError, ValueError):
    """Structure constants or action matrices do not define a representation."""


class BudgetError(LiePDError, ValueError):
    """Hom-set enumeration would exceed the configured budget."""


class IndeterminateError(LiePDError, ValueError):
    """The truncation degree is too small to decide a membership question."""


class ParseError(LiePDError, ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column
