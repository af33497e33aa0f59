"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid parameter or parameter combination (alpha, k, sigma, format, ...)."""


class InvalidPatternError(ValueError):
    """The pattern is empty or otherwise unusable."""


class CorrectnessViolation(RuntimeError):
    """Two registered algorithms disagreed on the same input during a benchmark."""
