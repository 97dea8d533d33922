"""Exception hierarchy shared by all hspectra modules."""


class SpectraError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(SpectraError):
    """A hypergraph or graph violates a structural invariant."""


class NonUniformEdge(ValidationError):
    """An edge does not contain exactly k distinct vertices."""


class DuplicateEdge(ValidationError):
    """The same edge appears more than once."""


class VertexOutOfRange(ValidationError):
    """An edge references a vertex outside 1..n."""


class TrivialHypergraph(ValidationError):
    """The hypergraph has no edges."""


class InvalidFamilyParameter(SpectraError):
    """Family parameters outside the family's domain (e.g. k < 3)."""


class OddUniformity(SpectraError):
    """Operation defined only for even k was called with odd k."""


class OddUniformityRequired(SpectraError):
    """Catalog defined only for odd k was called with even k."""


class DimensionMismatch(SpectraError):
    """Vector length does not match the hypergraph's vertex count."""


class ZeroVector(SpectraError):
    """A nonzero vector was required."""


class NoSignChange(SpectraError):
    """Bracketing root finder was given endpoints of equal sign."""


class MaxIterations(SpectraError):
    """Iteration cap reached before the convergence test was met.

    For the power iteration the last Collatz bracket is attached so the
    caller can report how far the bounds closed.
    """

    def __init__(self, message: str, lower: float | None = None,
                 upper: float | None = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class NotConnected(SpectraError):
    """Operation requires a connected hypergraph."""


class NotCored(SpectraError):
    """Operation requires every edge to contain a degree-1 vertex."""


class SignParityViolation(SpectraError):
    """Pendant sign pattern breaks the eigenvector parity rule."""


class WrongRootForR(SpectraError):
    """The supplied eigenvalue is not a root of the selected polynomial."""


class ChoiceCountMismatch(SpectraError):
    """Number of chosen edges differs from the declared root index r."""


class FamilyMismatch(SpectraError):
    """Hypergraph is not a member of the family the operation expects."""


class InstanceTooLarge(SpectraError):
    """Instance exceeds the desk-scale guard of the brute-force oracle."""
