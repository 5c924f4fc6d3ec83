"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid configuration document or sweep definition."""


class EvaluationError(RuntimeError):
    """A sweep point could not be evaluated; the message carries its coordinates."""


class QuadratureError(RuntimeError):
    """Numerical integration failed to converge within its budget."""


class SingularModelError(ValueError):
    """Model parameters make the requested signal singular (e.g. zero decay rate)."""
