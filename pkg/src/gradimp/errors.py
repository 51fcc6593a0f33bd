"""Exception hierarchy shared by all modules."""


class GradimpError(Exception):
    """Base class for every error raised by the package."""


class FormatError(GradimpError, ValueError):
    """Malformed input text (config, LSet literal, CSV, theory, proof, database)."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(message)

    def __str__(self):
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        return f"{', '.join(where)}: {self.message}" if where else self.message

    def locate(self, line=None, column=None) -> "FormatError":
        """Copy with missing position fields filled in from an enclosing parser."""
        return FormatError(self.message,
                           self.line if self.line is not None else line,
                           self.column if self.column is not None else column)


class DomainError(GradimpError, ValueError):
    """Operands live on different universes or lattices, or a name is unknown."""


class HedgeError(GradimpError, ValueError):
    """A hedge table violates one of the hedge axioms."""

    def __init__(self, violation):
        self.violation = violation
        super().__init__(str(violation))


class BudgetExceeded(GradimpError):
    """An exhaustive enumeration would visit more candidates than allowed."""


class PreconditionError(GradimpError, ValueError):
    """An algorithm was called outside the setting it is defined for."""
