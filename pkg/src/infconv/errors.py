"""Exception hierarchy shared by the library and the command line."""


class InfconvError(ValueError):
    """Base class. ``location`` names the offending field when known."""

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class ParseError(InfconvError):
    """Malformed input: bad JSON, wrong types, unparseable rationals."""


class InvariantViolation(InfconvError):
    """Well-formed input that breaks a structural invariant (metric axioms, Katetov, ...)."""


class HypothesisUnmet(InfconvError):
    """A theorem's hypotheses do not hold for the given instance."""
