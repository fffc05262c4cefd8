"""Exception hierarchy shared by every module."""


class BlowupLabError(Exception):
    pass


class GraphValidationError(BlowupLabError, ValueError):
    pass


class EndpointOutOfRangeError(GraphValidationError):
    pass


class SelfLoopError(GraphValidationError):
    pass


class DuplicateEdgeError(GraphValidationError):
    pass


class BudgetExceededError(BlowupLabError):
    """Requested computation is larger than the exact-search budget allows."""


class VerificationError(BlowupLabError):
    """A construction or witness failed its own self-check (a bug, never user error)."""


class ConvergenceError(BlowupLabError):
    pass


class Graph6Error(BlowupLabError, ValueError):
    pass


class InfeasibleConstructionError(BlowupLabError, ValueError):
    """Parameters too small to host the requested construction."""
