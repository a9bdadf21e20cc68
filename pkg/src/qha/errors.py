"""Exception hierarchy.  The CLI maps each class to an exit code."""


class QHAError(Exception):
    exit_code = 1


class DSLSyntaxError(QHAError):
    exit_code = 2

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class ValidationError(QHAError):
    exit_code = 3


class FieldMismatch(ValidationError, TypeError):
    pass


class CapExceeded(QHAError):
    exit_code = 4


class OracleTooLarge(QHAError):
    exit_code = 5


class OracleMismatch(QHAError):
    exit_code = 6


class InvariantError(QHAError):
    """A mathematical invariant failed (e.g. d o d != 0); always a bug."""

    exit_code = 1


class NonUnique(InvariantError):
    pass


class NoSolution(InvariantError):
    pass


class ReductionStuck(InvariantError):
    pass
