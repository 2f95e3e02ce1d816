"""Exception types raised by the engine."""


class TaftQuiverError(Exception):
    """Base class for all engine errors."""


class DivisionByZero(TaftQuiverError, ZeroDivisionError):
    pass


class SizeMismatch(TaftQuiverError, ValueError):
    """Operands live on quivers with different numbers of vertices."""


class SquareRootNotInField(TaftQuiverError, ValueError):
    """The requested square root does not exist in the working cyclotomic field."""


class HypothesisViolation(TaftQuiverError, ValueError):
    """A closed-form invariant computation was requested outside its hypotheses."""


class BudgetExceeded(TaftQuiverError, RuntimeError):
    pass


class ConfigError(TaftQuiverError, ValueError):
    """Malformed action config or command-line parameters."""
