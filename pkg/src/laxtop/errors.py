"""Exception hierarchy shared by all laxtop modules."""


class LaxtopError(Exception):
    """Base class for all errors raised by this package."""


class DuplicatePoint(LaxtopError):
    pass


class UnknownLabel(LaxtopError):
    pass


class NotATopology(LaxtopError):
    """Raised with the offending set (or pair of sets) attached."""

    def __init__(self, message, offending=None):
        super().__init__(message)
        self.offending = offending


class NotContinuous(LaxtopError):
    pass


class NotSurjective(LaxtopError):
    pass


class NotT0(LaxtopError):
    pass


class NotAPartialOrder(LaxtopError):
    pass


class NoMeets(LaxtopError):
    pass


class MeetsMissing(LaxtopError):
    """A required infimum does not exist; carries the witnessing family."""

    def __init__(self, message, family=None):
        super().__init__(message)
        self.family = family


class NotALattice(LaxtopError):
    pass


class NotACompleteLattice(LaxtopError):
    pass


class NotAFrame(LaxtopError):
    pass


class NotCompletelyDistributive(LaxtopError):
    pass


class NotAChain(LaxtopError):
    pass


class NotClosedLevel(LaxtopError):
    pass


class NotParallel(LaxtopError):
    pass


class BaseMismatch(LaxtopError):
    pass


class NotHeyting(LaxtopError):
    """A required implication is missing; carries the witnessing pair."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class CapExceeded(LaxtopError):
    pass


class InternalInconsistency(LaxtopError):
    """Two routes that must agree by theory disagreed; never swallowed."""


class ParseError(LaxtopError):
    pass


class SchemaError(LaxtopError):
    pass
