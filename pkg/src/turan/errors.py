"""Exception types shared across the package."""


class TuranError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(TuranError, ValueError):
    """Invalid parameters: bad part sizes, unknown vertices, out-of-range specs."""


class PartitenessError(ParameterError):
    """An edge would join two vertices of the same part."""


class RegimeError(ParameterError):
    """A check was invoked outside the host shape it is stated for."""


class PreconditionError(TuranError):
    """An input violates a semantic precondition (e.g. it contains a K_r)."""


class BudgetError(TuranError):
    """Verification work would exceed the configured transversal budget."""


class GraphFormatError(ParameterError):
    """Malformed graph or certificate text."""


class BudgetExhausted(TuranError):
    """The extremal search stopped before proving optimality.

    Carries the best feasible edge count found (``lower``), the proven
    upper bound at abort (``upper``) and the witness for ``lower``.
    """

    def __init__(self, message, *, lower, upper, witness=None, nodes=0, elapsed=0.0):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.witness = witness
        self.nodes = nodes
        self.elapsed = elapsed
