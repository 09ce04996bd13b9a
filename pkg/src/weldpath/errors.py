"""Exception types shared across the weldpath package."""


class WeldpathError(Exception):
    """Base class for all weldpath errors."""


class InputError(WeldpathError, ValueError):
    """An argument to a library operation is malformed or out of range."""


class WeldSpecError(WeldpathError, ValueError):
    """A weld description violates the model invariants.

    ``path`` is a ``/``-separated trail from the root to the offending node.
    """

    def __init__(self, message, path="root"):
        super().__init__(f"{path}: {message}")
        self.path = path


class ConstructionError(WeldpathError):
    """Assembling a weld tree failed, e.g. a matching pairs same-colored vertices."""


class OracleBoundError(WeldpathError):
    """An exhaustive-search operation was refused: the graph exceeds the oracle bound."""


class HypothesisError(WeldpathError):
    """The input violates a structural hypothesis the solver relies on."""


class CountingViolationError(WeldpathError):
    """A connector selection found no admissible vertex.

    This would falsify one of the counting inequalities the construction
    rests on, so it must surface loudly.  ``sizes`` maps each forbidden-set
    name to its size for diagnosis.
    """

    def __init__(self, message, sizes=None):
        super().__init__(message)
        self.sizes = dict(sizes or {})


class PaddingError(WeldpathError):
    """No adjacent free opposite-color pair was available for pair-count padding."""


class SolveError(WeldpathError):
    """Internal construction failure; ``trace`` holds the partial solve trace."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
