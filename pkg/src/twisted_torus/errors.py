"""Exceptions raised by the twisted torus link library."""


class TwistedTorusError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRange(TwistedTorusError, ValueError):
    """Parameters violate p, q >= 2 or 2 <= r <= p + q."""


class NotApplicable(TwistedTorusError, ValueError):
    """A conversion was requested outside the regime where it is defined."""


class NotALink(TwistedTorusError, ValueError):
    """The torus parameters describe a knot (gcd 1), not a link."""


class Unsupported(TwistedTorusError, ValueError):
    """Inputs fall outside the hypotheses of the requested formula or construction."""


class NotThisCase(TwistedTorusError, ValueError):
    """The tuple is not of the form handled by the requested obstruction formula."""


class UnsupportedShape(TwistedTorusError, ValueError):
    """A T-link does not have the two-block shape ((r, r*s), (p, q))."""


class OracleInconsistency(TwistedTorusError, RuntimeError):
    """
    Raised when the braid-closure oracle reaches a state that can only come
    from an implementation bug, e.g. an odd signed count of crossings between
    two components.
    """
