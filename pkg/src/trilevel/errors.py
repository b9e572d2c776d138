"""Exception types shared across the toolkit."""


class TrilevelError(Exception):
    """Base class for all toolkit errors."""


class ParameterError(TrilevelError):
    """An argument is outside its documented range."""


class SingularSystemError(TrilevelError):
    """A (near-)zero pivot was met while factorizing a linear system."""


class ModelLookupError(TrilevelError):
    """A task id is missing from the timing model."""


class InfeasibleScheduleError(TrilevelError):
    """Not enough processes to give every task at least one."""


class InstanceTooLargeError(TrilevelError):
    """Exhaustive search space exceeds the configured bound."""


class CalibrationError(TrilevelError):
    """A calibration task failed to execute."""


class PoolError(TrilevelError):
    """Worker pool misuse (over-lease, lease after shutdown, ...)."""


class ReportError(TrilevelError):
    """A run report is missing data required by the requested output."""
