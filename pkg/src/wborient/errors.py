"""Exception hierarchy shared by all modules.

Input-side problems (bad graphs, violated preconditions, unparseable
files) are ValueError subclasses so callers can catch them uniformly;
InternalInvariantError marks a guarantee of the construction failing,
which is a bug, never a user error.
"""


class GraphError(ValueError):
    """Structurally invalid graph data: loops, unknown ids, bad endpoints."""


class PreconditionError(ValueError):
    """An operation was called on input that violates its contract."""


class FormatError(ValueError):
    """A file or JSON object does not match the expected schema."""


class GenerationError(RuntimeError):
    """A randomized generator exhausted its retry budget."""


class InternalInvariantError(RuntimeError):
    """A property the construction guarantees did not hold; implementation bug."""
