"""Exception hierarchy shared by all toriclab modules."""


class ToricLabError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ToricLabError):
    """A document does not conform to its grammar."""


class ValidationError(ToricLabError):
    """A parsed object violates a structural invariant."""


class InternalError(ToricLabError):
    """An impossible state was reached; indicates corrupt input or a bug."""


class IncompleteFan(ToricLabError):
    """A fan failed one of the completeness certification tests."""


class OrientationError(ToricLabError):
    """No ordering of a wall satisfies the positive-basis convention."""


class NotFound(ToricLabError):
    """A required object (e.g. a positive-curvature wall) does not exist."""


class SupportInvalid(ToricLabError):
    """Support parameters do not define a polytope with the given normal fan."""


class NoWitness(ToricLabError):
    """Strict convexity of the effective cone could not be certified.

    Used both as a raised error and as a plain return value carrying the
    refutation: ``farkas`` holds convex coefficients combining the wall
    classes to zero, ``failing`` the walls a candidate paired
    non-positively with.
    """

    def __init__(self, message, *, farkas=None, failing=None):
        super().__init__(message)
        self.farkas = farkas
        self.failing = failing


class CertificationFailure(ToricLabError):
    """A certified pipeline produced an output contradicting its own check."""
