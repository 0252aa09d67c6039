"""Exception hierarchy.

All errors derive from :class:`HadamardError`, itself a ``ValueError`` so
callers that only care about bad input can catch the builtin.
"""


class HadamardError(ValueError):
    pass


class ShapeMismatch(HadamardError):
    pass


class RankDeficient(HadamardError):
    pass


class ZeroEntry(HadamardError):
    pass


class ZeroMatrix(HadamardError):
    pass


class NotDephased(HadamardError):
    pass


class NotHadamard(HadamardError):
    pass


class NotUnitary(HadamardError):
    pass


class NotTwoUnitaryPermutation(HadamardError):
    pass


class DomainError(HadamardError):
    pass


class UnknownName(HadamardError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class ArityMismatch(HadamardError):
    pass


class BadPlacement(HadamardError):
    pass


class RangeError(HadamardError):
    pass


class ParseError(HadamardError):
    """Malformed matrix text; carries the 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
