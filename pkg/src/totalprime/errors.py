"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """Family or construction parameters outside their validity range."""


class MalformedTreeError(ValueError):
    """Edge list supplied for a tree does not describe a tree."""


class NoCanonicalCycleError(LookupError):
    """No built-in Hamiltonian cycle recipe for the requested family."""


class EmptyInputError(ValueError):
    """An operation requiring a nonempty collection received an empty one."""


class NoPrimeError(ValueError):
    """No prime exists at or below the requested bound."""


class SieveLimitError(RuntimeError):
    """The prime table would have to grow past its configured cap."""


class SizeMismatchError(ValueError):
    """Labeling shape does not match the graph it is checked against."""


class BoundTooSmallError(ValueError):
    """Coprime label bound smaller than the vertex count."""


class NotPrimeLabelingError(ValueError):
    """Vertex labeling fails the prime-labeling conditions."""


class NotCoprimeError(ValueError):
    """Vertex labeling fails the coprime-labeling conditions."""


class InvalidHamiltonianDataError(ValueError):
    """Cycle or chord data inconsistent with the graph."""


class BoundViolatedError(ValueError):
    """Label bound too large for the edge-count hypothesis."""


class NotATreeError(ValueError):
    """Input graph is not a tree."""


class UnsupportedCaseError(ValueError):
    """Parameter combination outside the implemented construction cases."""


class NotFoundWithinBoundError(LookupError):
    """Exhaustive search ruled out every bound up to the requested cap."""
