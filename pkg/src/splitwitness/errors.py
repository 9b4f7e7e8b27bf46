"""Exception types shared across the engine."""


class SplitwitnessError(Exception):
    """Base class for all engine errors."""


class DivisionByZeroError(SplitwitnessError):
    pass


class OutOfRangeError(SplitwitnessError):
    pass


class BothZeroError(SplitwitnessError):
    pass


class ZeroInputError(SplitwitnessError):
    pass


class DegreeZeroError(SplitwitnessError):
    pass


class NotSquarefreeError(SplitwitnessError):
    pass


class NonIntegerCoefficientsError(SplitwitnessError):
    pass


class FieldMismatchError(SplitwitnessError):
    pass


class PrimitiveElementSearchExhausted(SplitwitnessError):
    pass


class DegreeCapExceeded(SplitwitnessError):
    """An intermediate tower degree crossed the configured cap (a resource
    limit, not a mathematical failure)."""

    def __init__(self, degree, cap):
        super().__init__(f"intermediate degree {degree} exceeds cap {cap}")
        self.degree = degree
        self.cap = cap


class NotIrreducibleError(SplitwitnessError):
    pass


class DegreeOutOfRangeError(SplitwitnessError):
    pass


class DegreeNotPrimeError(SplitwitnessError):
    pass


class UndecidableError(SplitwitnessError):
    """The question lies outside the range this engine can decide."""


class SturmMismatchError(SplitwitnessError):
    pass


class ReplayFailure(SplitwitnessError):
    """A certificate check failed to replay; carries the failing check name."""

    def __init__(self, check, detail=""):
        msg = f"check {check!r} failed to replay"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.check = check
        self.detail = detail


class NotInQsolvError(SplitwitnessError):
    pass


class PolySyntaxError(SplitwitnessError):
    """Polynomial text that does not match the grammar; carries the offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
