"""Exception hierarchy shared across the package."""


class MespError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(MespError):
    """Malformed graph input: bad syntax, loops, duplicate edges, out-of-range ids."""


class DisconnectedGraphError(MespError):
    """The graph (or a solver input derived from it) is not connected."""


class CapacityError(MespError):
    """A configured size cap was exceeded (requirement count, brute-force work, ...)."""


class SolverInvariantError(MespError):
    """A solver was about to return a witness that fails its own validity check.

    This never fires on correct inputs; it exists so that a bug surfaces as a
    loud failure instead of a silently wrong witness.
    """
