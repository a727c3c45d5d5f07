"""Error taxonomy shared by the whole package.

PreconditionError subclasses mean "the input does not satisfy the contract"
(CLI exit code 2).  InternalCheckFailed means an internal identity that the
construction guarantees did not hold, i.e. a bug (CLI exit code 70).
"""


class SpecrepError(Exception):
    pass


class ParseError(SpecrepError):
    """Polynomial text that does not match the input grammar."""


class PreconditionError(SpecrepError):
    """Input violates a documented precondition."""


class NotSquarefree(PreconditionError):
    """f shares a positive t-degree factor with its t-derivative."""


class NotSmooth(PreconditionError):
    """The affine curve f = 0 has a singular point."""


class BranchPointNotRational(PreconditionError):
    """Branch data of the curve does not lie in Q(i)."""


class NotHyperbolic(PreconditionError):
    """Ternary form fails hyperbolicity w.r.t. the given direction."""


class PointNotOnCurve(PreconditionError):
    """A point handed to prime_at_point does not satisfy f(a, t0) = 0."""


class CeilingExceeded(PreconditionError):
    """Instance exceeds a documented size ceiling (e.g. minor count)."""


class InternalCheckFailed(SpecrepError):
    """A construction-time identity failed; indicates a bug."""


class NonTermination(InternalCheckFailed):
    """Degree-reduction loop exceeded its round guard."""
