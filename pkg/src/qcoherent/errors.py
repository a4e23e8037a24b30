"""Exception and warning types shared across the package."""


class QCoherentError(Exception):
    """Base class for all numerical failures raised by this package."""


class NonConvergenceError(QCoherentError):
    """A series or product hit its term cap before meeting the tolerance."""


class TruncationInsufficientError(QCoherentError):
    """A Fock-space truncation left more probability in the tail than allowed."""


class DomainCapError(QCoherentError):
    """A semi-infinite integral reached the domain cap before its tail converged."""


class DegenerateDivisionError(QCoherentError):
    """A denominator underflowed where a strictly positive value was expected."""


class ZeroFactorWarning(RuntimeWarning):
    """An infinite-product factor was exactly zero; the product is reported as 0."""
