"""Exception hierarchy shared by every module."""


class CoxcayError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class GraphError(CoxcayError, ValueError):
    """Invalid defining graph, vertex or vertex set."""


class GraphParseError(GraphError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class CapExceeded(CoxcayError, RuntimeError):
    """A configured search cap was hit; the instance is too large, not wrong."""


class OrbitCapExceeded(CapExceeded):
    pass


class BallCapExceeded(CapExceeded):
    pass


class NodeBudgetExceeded(CapExceeded):
    pass


class LocalActionError(CoxcayError):
    pass


class ConfigurationError(CoxcayError, ValueError):
    pass


class SynthesisError(CoxcayError):
    pass
