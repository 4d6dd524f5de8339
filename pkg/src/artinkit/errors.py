"""Exception types shared across the package."""


class ArtinKitError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(ArtinKitError, ValueError):
    """A presentation-graph file or construction violates the graph invariants."""


class WordError(ArtinKitError, ValueError):
    """A word fails to parse or uses generators outside the allowed alphabet."""


class PreconditionError(ArtinKitError, ValueError):
    """An operation was called on input that violates its stated precondition."""


class DiagramError(ArtinKitError, ValueError):
    """A disc-diagram file or structure violates the diagram invariants."""


class CapExceeded(ArtinKitError, RuntimeError):
    """A configurable resource cap was hit; the result is undecided, not wrong."""


class SearchExhausted(ArtinKitError, RuntimeError):
    """A bounded exhaustive search finished without finding a witness."""


class HypothesisError(ArtinKitError, ValueError):
    """A decider or constructor was invoked outside its theorem hypotheses."""
