"""Exception types shared across the package."""


class WoiError(Exception):
    """Base class for package-specific errors."""


class GraphError(WoiError):
    """Invalid graph document or bad input to a graph operation."""


class HypothesisError(WoiError):
    """The mathematical hypotheses of an operation are not satisfied."""


class ResourceCapError(WoiError):
    """A computation exceeded a configured size limit."""


class ConsistencyError(WoiError):
    """Two independent computation routes disagreed.

    This is always a defect report: the routes are mathematically
    equivalent, so a disagreement means at least one of them is wrong.
    """
