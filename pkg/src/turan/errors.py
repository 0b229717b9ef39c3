"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or operation arguments."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


class ParityError(GraphError):
    """A construction whose parity preconditions fail (no such graph)."""


class InfeasibleTaskError(RuntimeError):
    """An exhaustive task outside the feasibility envelope was refused."""
