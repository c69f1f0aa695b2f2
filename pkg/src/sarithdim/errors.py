"""Exception hierarchy with stable machine-readable codes.

Every domain error carries a ``code`` attribute that the CLI exposes
verbatim, so scripted consumers can dispatch on error codes instead of
parsing messages.
"""


class CalcError(Exception):
    """Base class of all domain errors raised by this package."""

    code = "ERROR"


class MalformedSpec(CalcError):
    """Field spec string does not match the accepted grammar."""

    code = "MALFORMED_SPEC"


class NotSquarefree(CalcError):
    code = "NOT_SQUAREFREE"


class NotTotallyReal(CalcError):
    """Requested quadratic field is imaginary or degenerate (d <= 1)."""

    code = "NOT_TOTALLY_REAL"


class DuplicatePlace(CalcError):
    code = "DUPLICATE_PLACE"


class InvalidSelector(CalcError):
    """A place selector was applied to a prime it does not make sense for."""

    code = "INVALID_SELECTOR"


class UnsupportedField(CalcError):
    code = "UNSUPPORTED_FIELD"


class ToleranceTooTight(CalcError):
    code = "TOLERANCE_TOO_TIGHT"


class NoConvergent(CalcError):
    """No rational with the requested denominator bound lies within tol."""

    code = "NO_CONVERGENT"


class Ambiguous(CalcError):
    """More than one rational with the denominator bound lies within tol."""

    code = "AMBIGUOUS"


class OddCardinality(CalcError):
    """The place set has odd size; quaternion ramification sets are even."""

    code = "ODD_CARDINALITY"


class InternalInconsistency(CalcError):
    """Two independent computation routes disagreed.  Always a bug."""

    code = "INTERNAL_INCONSISTENCY"


class MissingDatum(CalcError):
    code = "MISSING_DATUM"


class DatumPlaceMismatch(CalcError):
    code = "DATUM_PLACE_MISMATCH"
