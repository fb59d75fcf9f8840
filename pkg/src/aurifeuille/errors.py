"""Exception types raised across the library.

Every failure mode that callers are expected to distinguish gets its own
class here, so `except` clauses (and the command-line tool's error
reporting) can name the condition rather than pattern-match message text.
"""


class AurifeuilleError(Exception):
    """Base class for all library-specific errors."""


class NTooSmall(AurifeuilleError):
    """An argument n was below the smallest value the operation supports."""


class NotSquareFree(AurifeuilleError):
    """An argument that must be square-free has a repeated prime factor."""


class NotOddSquareFree(AurifeuilleError):
    """The Gauss-pair recurrence needs n odd, square-free and at least 3."""


class BadResidueClass(AurifeuilleError):
    """The argument lies in a residue class the operation is not defined for."""


class SearchCapExceeded(AurifeuilleError):
    """A bounded search ran out of budget before finding its answer."""


class InternalInconsistency(AurifeuilleError):
    """A cross-check that should hold by construction failed; likely a bug."""


class InexactDivision(AurifeuilleError):
    """Polynomial division left a remainder (or needed fractional coefficients)."""


class NonIntegerCoefficient(AurifeuilleError):
    """A Newton-identity step did not divide exactly, so the coefficients
    are not integers; the supplied power sums cannot come from a monic
    integer polynomial."""


class NonIntegerStep(AurifeuilleError):
    """A recurrence step whose exact divisibility is guaranteed by theory
    failed to divide; indicates corrupted inputs or an implementation bug."""


class BadRadius(AurifeuilleError):
    """A growth-bound radius R must satisfy R > 1."""


class BadConstantTerm(AurifeuilleError):
    """Series square roots are only taken of series with constant term 1."""


class NonIntegralOracle(AurifeuilleError):
    """The power-series route produced a non-integer (or structurally
    impossible) coefficient where an integer was required."""


class NotAurifeuillianPoint(AurifeuilleError):
    """The evaluation point is not of the form m^2 * n with rational m > 0."""


class PrecisionTooLow(AurifeuilleError):
    """The requested working precision cannot separate the candidate factor
    from its neighbours."""


class RoundingFailed(AurifeuilleError):
    """Rounding the floating-point factor estimate did not yield a divisor."""
