"""Exception types shared across the package."""


class CayleyAutError(Exception):
    """Base class for every error raised deliberately by this package."""


class OrderExceedsCap(CayleyAutError):
    pass


class NotASubgroup(CayleyAutError):
    pass


class InvalidParameters(CayleyAutError, ValueError):
    pass


class SizeLimitExceeded(CayleyAutError):
    pass


class SearchBoundExceeded(SizeLimitExceeded):
    pass


class BudgetExceeded(CayleyAutError):
    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class DisconnectedGraph(CayleyAutError):
    pass


class DisconnectedTranspositionGraph(CayleyAutError):
    pass


class GeneratorNotInS(CayleyAutError, ValueError):
    pass


class LiftVerificationFailed(CayleyAutError):
    """A lifted map failed to be a Cayley-graph automorphism (a bug)."""
