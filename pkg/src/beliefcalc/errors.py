"""Exception taxonomy shared across the package.

Every failure mode raised by the library is a subclass of ``BeliefError``,
so callers (notably the CLI) can catch one type and still report the
specific constraint that was violated.
"""


class BeliefError(Exception):
    """Base class for all errors raised by this package."""


class FrameMismatch(BeliefError):
    """An event or mass function was used with a frame it does not belong to."""


class EmptyFocalSet(BeliefError):
    """A mass entry was keyed by the empty set."""


class NegativeMass(BeliefError):
    """A mass or probability was negative."""


class MassNotNormalized(BeliefError):
    """Masses or probabilities do not sum to exactly 1."""


class BackendMismatch(BeliefError):
    """Exact and floating-point numbers were mixed, or a float reached an
    exact-only construction path."""


class ConditioningImpossible(BeliefError):
    """The conditioning event carries no mass (normalizer is 0)."""


class FrameTooLarge(BeliefError):
    """The requested frame or enumeration exceeds the supported bound."""


class DuplicateVariableName(BeliefError):
    """Two variables in one product frame share a name."""


class UnknownVariable(BeliefError):
    """A predicate referenced a variable that is not in the frame."""


class UnknownValue(BeliefError):
    """A predicate referenced a value outside a variable's range."""


class InvalidParams(BeliefError):
    """Scenario parameters violate a documented constraint."""


class ValidationError(BeliefError):
    """A scenario file parsed but failed semantic validation."""


class VerificationFailed(BeliefError):
    """An enumeration run violated an identity that must hold exactly
    (normalizer mass, posterior support, or focal-count sanity)."""


class ParseError(BeliefError):
    """A scenario file could not be parsed.

    Carries the 1-based ``line`` and ``column`` of the offending token.
    """

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
