"""Exception hierarchy.

Every error raised on purpose by the package derives from ``SgpError`` so the
CLI can map it to an exit code. The grouping below mirrors those codes:
input errors (2), precondition errors (3), internal bound violations (4).
"""


class SgpError(Exception):
    """Base class for all package errors."""


# -- invalid input ---------------------------------------------------------

class InputError(SgpError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message, text="", offset=0):
        self.text = text
        self.offset = offset
        super().__init__(f"{message} (at byte {offset} of {text!r})")


class EmptyGenerators(InputError):
    pass


class NonCoprime(InputError):
    pass


class NonPositive(InputError):
    pass


class UnknownProposition(InputError):
    pass


# -- mathematically meaningful refusals -------------------------------------

class PreconditionError(SgpError, ValueError):
    pass


class NotInSemigroup(PreconditionError):
    pass


class ParentMismatch(PreconditionError):
    pass


class NotIntegral(PreconditionError):
    pass


class ImproperIdeal(PreconditionError):
    pass


class NotGorenstein(PreconditionError):
    pass


class NotAReduction(PreconditionError):
    pass


class PreconditionFailed(PreconditionError):
    pass


# -- internal limits ---------------------------------------------------------

class InternalLimitError(SgpError, RuntimeError):
    pass


class OutOfWindow(InternalLimitError):
    """A computation needed exponents beyond the semigroup's ord window."""


class BoundExceeded(InternalLimitError):
    """A search passed a hard termination bound; this indicates a bug."""


class BackendDisagreement(InternalLimitError):
    """A corpus scan and the per-instance checker reached different verdicts."""
