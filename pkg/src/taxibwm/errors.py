"""Exception hierarchy shared by all taxibwm modules."""


class TaxiBwmError(Exception):
    """Base class for every error raised by this package."""


class PcsValidationError(TaxiBwmError):
    """A raw comparison system failed validation."""


class BadIndex(PcsValidationError):
    """best/worst index out of range, equal, or a middle index was expected."""


class BadLength(PcsValidationError):
    """A comparison vector does not have length n."""


class SelfComparisonNotOne(PcsValidationError):
    """a_bb or a_ww differs from 1."""


class MismatchedBw(PcsValidationError):
    """The best-to-worst entry disagrees between the two vectors."""


class OutOfScale(PcsValidationError):
    """An entry violates the active scale mode."""


class NotConsistent(TaxiBwmError):
    """Exact weights were requested for an inconsistent system."""


class ZeroWeight(TaxiBwmError):
    """A weight used as a ratio denominator is zero."""


class DomainError(TaxiBwmError):
    """An argument lies outside the objective's domain [1, inf)."""


class PlateauUndecidable(TaxiBwmError):
    """Float-mode segment coefficients are too close to zero to classify."""


class BranchUnstable(TaxiBwmError):
    """A modification branch changes inside an optimal interval."""


class OutOfFamilyDomain(TaxiBwmError):
    """Instantiation point lies outside a family's optimal-value domain."""


class VerificationFailed(TaxiBwmError):
    """An oracle cross-check disagreed with the analytical result."""
