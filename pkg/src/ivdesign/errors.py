"""Exception hierarchy. Each solver error carries the CLI exit code it maps to."""


class IvDesignError(Exception):
    exit_code = 1


class NonChordalInput(IvDesignError):
    exit_code = 2

    def __init__(self, message="graph is not chordal", witness=None):
        super().__init__(message)
        # vertex whose later neighbourhood is not a clique
        self.witness = witness


class ColorsExhausted(IvDesignError):
    exit_code = 3

    def __init__(self, message, needed=None, available=None):
        super().__init__(message)
        self.needed = needed
        self.available = available


class BudgetExceeded(IvDesignError):
    exit_code = 4

    def __init__(self, message, estimate=None, cap=None):
        super().__init__(message)
        self.estimate = estimate
        self.cap = cap


class InfeasibleInfiniteCosts(IvDesignError):
    exit_code = 5


class ImproperColoring(IvDesignError):
    exit_code = 6


class GraphFormatError(IvDesignError, ValueError):
    """Malformed graph/design file; message names the offending field."""

    exit_code = 65
