"""Exception types shared across the package."""


class FuzzyBvpError(Exception):
    """Base class for every error this library raises deliberately."""


class InvalidFuzzyNumberError(FuzzyBvpError, ValueError):
    """Branch data violates the fuzzy-number ordering or monotonicity rules."""


class UnsupportedProblemError(FuzzyBvpError):
    """The problem leaves the closed-form class this method covers.

    Raised for repeated characteristic roots, quartics that are not
    biquadratic, and root configurations the exp/trig/hyperbolic basis
    cannot represent. The failure is a method boundary, not a bug.
    """


class EigenvalueDegeneracyError(FuzzyBvpError):
    """Boundary elimination hit a zero pivot.

    Happens when the domain length makes the homogeneous problem resonant
    (an eigenvalue of the differential operator), so the shooting constant
    cannot be solved for.
    """


class CaseInapplicableError(FuzzyBvpError):
    """The requested differentiability case does not fit these coefficients."""


class ProblemFormatError(FuzzyBvpError):
    """A problem file failed to parse.

    ``line`` is the 1-based offending line when one can be pinpointed.
    """

    def __init__(self, message: str, line: int | None = None):
        self.message = message
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")
