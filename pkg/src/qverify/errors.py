"""Error taxonomy for the q-series engine.

Every failure mode the evaluators can hit has a dedicated class so callers
(and the verification runner) can tell an unlucky specialization from a bug.
"""


class QVerifyError(Exception):
    """Base class for all engine errors."""


class DivisionByZero(QVerifyError):
    """Division by an exactly-zero series or coefficient."""


class GenericityError(QVerifyError):
    """A specialization hit a pole (e.g. z an integral power of q in m(x,q,z),
    or a vanishing theta function in a denominator)."""


class OrderExceeded(QVerifyError):
    """A coefficient beyond the exactly-known truncation window was requested."""


class UnsupportedSubstitution(QVerifyError):
    """A substitution that cannot be carried out exactly, e.g. a fractional
    power of a coefficient that is not a root of unity."""


class UnsupportedArgument(QVerifyError):
    """An argument outside an evaluator's domain, e.g. (x; q)_inf with
    a negative exponent on x, or a base with non-positive exponent."""


class ParseError(QVerifyError):
    """Identity DSL syntax or arity error, with source location."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"{message} (line {line}, column {col})"
        super().__init__(message)


class UnknownCatalogName(QVerifyError):
    """Lookup of a catalog function that is not in the registry."""
