"""
Error types raised across bubblelab.

Every error is a ValueError (or an OSError for file problems), so code that
guards calls with ``except ValueError`` keeps working.
"""


class BubbleLabError(ValueError):
    """base class of all bubblelab errors"""


class InvalidGrid(BubbleLabError):
    pass


class InvalidParams(BubbleLabError):
    pass


class OutOfRange(BubbleLabError):
    pass


class NoDecay(BubbleLabError):
    pass


class InsufficientData(BubbleLabError):
    pass


class NonPositive(BubbleLabError):
    pass


class SingularPoint(BubbleLabError):
    pass


class DivergentTail(BubbleLabError):
    pass


class DivergentIntegral(BubbleLabError):
    pass


class TooLarge(BubbleLabError):
    pass


class InvalidInitial(BubbleLabError):
    pass


class NonConvergence(BubbleLabError):
    """
    raised when an iteration stops at max_iter without meeting its tolerance

    Parameters
    ----------
    msg: str
        the error message

    report: SolveReport, optional (default=None)
        the state of the iteration when it stopped
    """
    def __init__(self, msg, report=None):
        super(NonConvergence, self).__init__(msg)
        self.report = report


class NonPositivityDetected(BubbleLabError):
    pass


class LinearSolveFailure(BubbleLabError):
    pass


class GridMismatch(BubbleLabError):
    pass


class DomainTooSmall(BubbleLabError):
    pass


class MaxNotAtOrigin(BubbleLabError):
    pass


class ScalingViolation(BubbleLabError):
    pass


class ConfigError(BubbleLabError):
    pass


class ExperimentFailure(BubbleLabError):
    pass


class IoError(BubbleLabError, OSError):
    pass
