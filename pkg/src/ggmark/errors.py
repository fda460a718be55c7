"""Exception types shared across the package."""


class GGMarkError(Exception):
    """Base class for all library-specific errors."""


class ParseError(GGMarkError, ValueError):
    """Malformed overpartition text."""


class DuplicateOverline(ParseError):
    """More than one overlined part of the same size."""


class InvalidInput(GGMarkError, ValueError):
    """Input outside the stated domain of a map."""


class InvalidMove(GGMarkError, ValueError):
    """Dilation/reduction precondition violated."""


class NotInvertible(GGMarkError, ArithmeticError):
    """Series has no truncated multiplicative inverse."""


class DivergentProduct(GGMarkError, ValueError):
    """Infinite product whose factors do not tend to 1 termwise."""


class FractionalExponent(GGMarkError, ValueError):
    """Substitution would create non-integral q-exponents."""


class NotApplicable(GGMarkError, ValueError):
    """Transformation template does not match the pair it was applied to."""


class ChainBroken(GGMarkError, RuntimeError):
    """An intermediate pair of a transformation chain failed verification."""

    def __init__(self, step: str, message: str = ""):
        self.step = step
        super().__init__(message or f"chain broken at step {step!r}")
