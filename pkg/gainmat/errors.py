"""
Exception hierarchy for gainmat

Every error raised for bad input derives from GainMatError, which is a
ValueError, so callers that only care about "invalid input" can keep catching
ValueError.
"""

from typing import Optional


class GainMatError(ValueError):
    """Base class for all gainmat input errors"""


class GraphError(GainMatError):
    """Malformed graph, edge, or edge set"""


class SignatureError(GraphError):
    """Edge sign violates the kind constraints (half edges negative, loose edges positive)"""


class OrientationError(GraphError):
    """Orientation is missing an end or violates tau(v,e)tau(w,e) = -sigma(e)"""


class MalformedWalkError(GraphError):
    """Walk whose edges are not incident with the declared vertices and end slots"""


class GroupError(GainMatError):
    """Unknown group name or a value that is not an element of the group"""


class NotPseudoforestError(GraphError):
    """Edge set is not a forest with at most one half edge per component"""


class NotHyperbalancedError(GainMatError):
    """Operation needs a hyperbalanced edge set"""


class ContractionObstruction(GainMatError):
    """Hyperbalanced set whose gains cannot be switched to neutral in its group"""


class EmbeddingError(GainMatError):
    """Gains cannot be embedded in an exact field of characteristic other than 2"""


class DegenerateArrangementError(GainMatError):
    """Arrangement has a degenerate hyperplane (a neutral loose edge)"""


class InstanceError(GainMatError):
    """Problem reading or validating an instance file"""

    def __init__(self, message: str, line: Optional[int] = None,
                 column: Optional[int] = None, path: Optional[str] = None,
                 source: Optional[str] = None):
        self.line = line
        self.column = column
        self.path = path
        self.source = source
        location = []
        if source:
            location.append(source)
        if line is not None:
            location.append(f'line {line}')
        if column is not None:
            location.append(f'column {column}')
        if path:
            location.append(path)
        prefix = ', '.join(location)
        super().__init__(f'{prefix}: {message}' if prefix else message)


class BudgetExceeded(GainMatError):
    """Enumeration larger than the configured budget"""

    def __init__(self, what: str, limit: int, count: int):
        self.what = what
        self.limit = limit
        self.count = count
        super().__init__(
            f'{what} needs {count} ground elements but the budget allows {limit}'
        )
