"""
Exception hierarchy shared by every sub-package.

Each class maps to one command-line exit code (see ``src.main.EXIT_CODES``).
A zero scalar is a value, never an error.
"""
from typing import List, Optional, Sequence, Tuple


class SpinnetError(Exception):
    """Base class for all engine errors."""


class DiagramSyntaxError(SpinnetError):
    """A line of the text diagram format could not be parsed."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class DiagramSchemaError(SpinnetError):
    """A JSON diagram document violates the spinnet-diagram/1 schema."""

    def __init__(self, problems: Sequence[Tuple[str, str]]):
        self.problems: List[Tuple[str, str]] = list(problems)
        lines = [f"{path}: {msg}" for path, msg in self.problems]
        super().__init__("schema violations:\n  " + "\n  ".join(lines))


class InvalidDiagramError(SpinnetError):
    """Strand bookkeeping, tracing or coloring of a sliced diagram failed."""

    def __init__(self, message: str, slice_index: Optional[int] = None):
        self.slice_index = slice_index
        where = f"slice {slice_index}: " if slice_index is not None else ""
        super().__init__(f"{where}{message}")


class InadmissibleLabelsError(SpinnetError):
    """An operation that requires an admissible triple received another one."""

    def __init__(self, triple: Tuple[int, int, int]):
        self.triple = tuple(triple)
        super().__init__(f"inadmissible triple {self.triple}")


class OracleBudgetExceeded(SpinnetError):
    """The brute-force expansion ran past its elementary-term budget."""

    def __init__(self, budget: int, reached: int):
        self.budget = budget
        self.reached = reached
        super().__init__(f"oracle too large: {reached} terms exceeds budget {budget}")


class BoundaryMismatchError(SpinnetError):
    """Two morphisms or a vertex and its dual do not share a boundary."""


class ZeroDenominatorError(SpinnetError, ZeroDivisionError):
    """A rational function was built over the zero polynomial."""
