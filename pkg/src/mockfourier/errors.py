"""Exception hierarchy.

Validation failures map to CLI exit code 2, budget failures to 4 and every
other numerical failure to 3.
"""


class MockFourierError(Exception):
    """Base class for all library errors."""


class ValidationError(MockFourierError, ValueError):
    pass


class ScaleTooSmall(ValidationError):
    pass


class MissingZero(ValidationError):
    pass


class DuplicateDigit(ValidationError):
    pass


class CongruentDigits(ValidationError):
    pass


class InvalidDigit(ValidationError):
    pass


class SizeMismatch(ValidationError):
    pass


class CongruentElements(ValidationError):
    pass


class NotUnitary(ValidationError):
    def __init__(self, defect: float):
        super().__init__(f"not unitary (defect {defect:.3e})")
        self.defect = defect


class DuplicateExponent(ValidationError):
    pass


class BudgetExceeded(MockFourierError):
    pass


class DepthTooShallow(MockFourierError):
    pass


class DepthExhausted(MockFourierError):
    pass


class InsufficientData(MockFourierError):
    pass


class ExcessClamping(MockFourierError):
    pass


class NoConvergence(MockFourierError):
    pass


class SpectrumOverflow(MockFourierError, OverflowError):
    """A spectrum numerator left the signed 64-bit range."""
