"""Exception hierarchy shared by every cghkit module."""

__all__ = [
    "CghError",
    "VertexRangeError",
    "UniformityError",
    "PatternDomainError",
    "PatternPresentError",
    "ConstructionParameterError",
    "CghFormatError",
    "BudgetExhaustedError",
]


class CghError(Exception):
    pass


class VertexRangeError(CghError, ValueError):
    def __init__(self, vertex, n):
        super().__init__(f"vertex {vertex!r} is outside [0, {n})")
        self.vertex = vertex
        self.n = n


class UniformityError(CghError, ValueError):
    pass


class PatternDomainError(CghError, ValueError):
    pass


class PatternPresentError(CghError, ValueError):
    pass


class ConstructionParameterError(CghError, ValueError):
    pass


class CghFormatError(CghError, ValueError):
    def __init__(self, message, line=None, column=None):
        location = ""
        if line is not None:
            location = f"line {line}"
            if column is not None:
                location += f", column {column}"
            location += ": "
        super().__init__(f"{location}{message}")
        self.line = line
        self.column = column


class BudgetExhaustedError(CghError, RuntimeError):
    pass
