"""Exception hierarchy shared by every module.

The CLI maps these onto its exit-code contract, so keep the classes
distinct even where they could share a base.
"""


class K2HamError(Exception):
    """Base class for all errors raised by this package."""


class CapacityError(K2HamError, ValueError):
    """Graph exceeds the supported vertex capacity."""


class GraphError(K2HamError, ValueError):
    """Input violates a structural invariant (loops, multi-edges, bad index)."""


class ParseError(K2HamError, ValueError):
    """Malformed graph6/sparse6/edge-list/embedding input."""


class PreconditionError(K2HamError, ValueError):
    """An operation's precondition does not hold for the given arguments."""


class Undecided(K2HamError):
    """A search exhausted its node budget before reaching an answer.

    This is never a negative answer; callers must treat it as unknown.
    """

    def __init__(self, nodes):
        super().__init__(f"search budget exhausted after {nodes} node expansions")
        self.nodes = nodes
