"""Exception hierarchy shared by every module."""


class AvkitError(Exception):
    """Base class for all library errors."""


class DimensionError(AvkitError, ValueError):
    """Objects living in rings with different numbers of variables were mixed."""


class FieldMismatchError(AvkitError, ValueError):
    """Objects over different coefficient fields were mixed."""


class SingularMatrixError(AvkitError, ValueError):
    pass


class ParseError(AvkitError, ValueError):
    """Malformed text input; carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class BudgetExhausted(AvkitError):
    """A Groebner computation hit its resource cap.

    ``stats`` holds partial statistics (pairs processed, basis size, ...).
    """

    def __init__(self, message: str, stats: dict | None = None):
        self.stats = dict(stats or {})
        super().__init__(f"budget exhausted: {message} {self.stats}")


class GenericityError(AvkitError):
    """Independent random trials disagreed.

    Usually means the coefficient pool is too small or the chosen
    points/coordinates were special.  Rerun with another seed or a larger
    field.
    """


class RouteMismatchError(GenericityError):
    """Two independent computations of the same AV value disagreed."""


class GenericityWarning(UserWarning):
    pass
