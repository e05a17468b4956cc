class ContigHypError(Exception):
    """Base exception for contighyp errors"""


class InvalidParameterError(ContigHypError):
    """Raised when inputs violate a documented invariant"""


class DomainError(InvalidParameterError):
    """Raised when parameters fall outside an operation's domain"""


class PoleError(InvalidParameterError):
    """Raised when a gamma argument sits on (or within tolerance of) a pole"""


class ShiftUnderflowError(InvalidParameterError):
    """Raised when the contiguous step is applied with a zero upper shift"""


class LogarithmicCaseError(InvalidParameterError):
    """Raised when c-a-b is an integer and the connection formula degenerates"""


class NumericalResourceError(ContigHypError):
    """Raised when a computation runs out of terms or precision"""


class NonConvergenceError(NumericalResourceError):
    """Raised when a series hits its term cap before the tail bound is met"""


class PrecisionExhaustedError(NumericalResourceError):
    """Raised when guard digits cannot meet the accuracy contract"""


class GammaOverflowError(NumericalResourceError, OverflowError):
    """Raised when a gamma product leaves the representable range"""
