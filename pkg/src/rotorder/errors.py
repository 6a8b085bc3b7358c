"""Exception hierarchy shared by the algebra and decision layers."""


class RotorderError(Exception):
    """Base class for every error raised by this package."""


class NonExactDivision(RotorderError, ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class NotSquarefree(RotorderError, ValueError):
    """Root isolation was asked to work on a polynomial with repeated roots."""


class LostRoot(RotorderError):
    """Bisection found no sign change; the interval did not isolate a root."""


class IsolationFailure(RotorderError):
    """Refinement hit its precision cap without separating the roots."""


class LemmaViolation(RotorderError, AssertionError):
    """An integrality statement that must always hold turned out false."""


class DegreeOverflow(RotorderError):
    """An annihilating polynomial grew past the configured degree cap."""

    def __init__(self, degree, cap):
        super().__init__(f"annihilator degree {degree} exceeds cap {cap}")
        self.degree = degree
        self.cap = cap


class CapExceeded(RotorderError):
    """Group closure produced more elements than the caller allowed."""

    def __init__(self, cap):
        super().__init__(f"closure exceeded {cap} elements")
        self.cap = cap
