"""
Exception hierarchy for ShiftLab
Every error raised on purpose by the library derives from ShiftLabError
"""

from typing import Optional, Sequence


class ShiftLabError(Exception):
    """Base class for all library errors"""


class EnumerationGuardError(ShiftLabError, ValueError):
    """An exhaustive algorithm was asked to run above its size guard"""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: n={size} exceeds the enumeration guard n <= {limit}")


class LabelingError(ShiftLabError, ValueError):
    """A vertex labeling is not a bijection onto the vertices of a complex"""


class StarError(ShiftLabError, ValueError):
    """star_d applied with an existing vertex or a dimension below 1"""


class DsParseError(ShiftLabError, ValueError):
    """A construction string could not be parsed"""

    def __init__(self, message: str, position: int = 0):
        self.position = position
        super().__init__(f"{message} (position {position})")


class DsTransformError(ShiftLabError, ValueError):
    """A string transform was applied outside its domain"""


class NotThresholdError(ShiftLabError, ValueError):
    """The elimination got stuck: the graph is not threshold"""

    def __init__(self, stuck_vertices: Sequence[int]):
        self.stuck_vertices = tuple(stuck_vertices)
        listed = ", ".join(str(v) for v in self.stuck_vertices)
        super().__init__(
            f"graph is not threshold: no isolated or dominating vertex in the "
            f"subgraph induced on {{{listed}}}"
        )


class ComplexFormatError(ShiftLabError, ValueError):
    """Malformed complex or graph text file"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class UnknownTheoremError(ShiftLabError, ValueError):
    """run_theorem was given an id it does not know"""


class ConsistencyError(ShiftLabError):
    """Two characterizations that must agree returned different verdicts"""
