"""Domain exceptions for the spinpoly package.

All of them subclass ValueError so a caller can catch the whole family with
one clause; the command handler maps them to exit codes.
"""


class BudgetExceededError(ValueError):
    """Raised when an exact enumeration would exceed its configured budget"""


class AssumptionViolationError(ValueError):
    """Raised when a pair potential breaks assumption A or B"""


class MissingTailCertificateError(ValueError):
    """Raised when an infinite-range coupling has no tail certificate"""


class DivergentCouplingError(ValueError):
    """Raised when a coupling's sup-sum cannot be finite"""


class StabilityBoundError(ValueError):
    """Raised when edge weights violate the stability bound 2B"""


class IncompleteTableError(ValueError):
    """Raised when an activity table does not cover the polymers required"""


class InconsistencyError(ValueError):
    """Raised when two exact computations disagree in an impossible way"""


class ConfigError(ValueError):
    """Raised for malformed or contradictory run configurations"""
