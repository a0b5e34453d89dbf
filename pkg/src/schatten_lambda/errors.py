"""Exception types shared across the package.

The CLI maps these onto exit codes: format/parse problems exit 1, domain
precondition violations exit 2, verification failures exit 3.
"""


class InvalidInputError(ValueError):
    """Input object is malformed for the operation (shape, finiteness, ...)."""


class InvalidParameterError(ValueError):
    """A scalar parameter is outside the operation's admissible range."""


class OutsideUnitBallError(ValueError):
    """Matrix lies outside the relevant unit ball beyond tolerance."""


class DegenerateInputError(ValueError):
    """Input is degenerate for the requested decomposition (e.g. the zero
    element where a normalized remainder is required)."""


class FormatError(ValueError):
    """A serialized matrix or result fails to parse."""


class VerificationError(RuntimeError):
    """An internal cross-check that should hold for any correct
    implementation failed; indicates a bug, not bad user input."""
