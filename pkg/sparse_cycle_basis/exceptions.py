"""Exceptions raised by sparse_cycle_basis.

Input problems derive from ``ValueError`` as well, so callers that only
care about bad input can keep catching that.
"""


class SparseBasisError(Exception):
    """Base class for every error raised by this package."""


class InvalidGraph(SparseBasisError, ValueError):
    """Malformed multigraph (bad endpoint, loop, negative count)."""


class InvalidEmbedding(SparseBasisError, ValueError):
    """Rotation system or signature that does not describe an embedding."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DisconnectedGraph(SparseBasisError, ValueError):
    pass


class EdgeInTree(SparseBasisError, ValueError):
    pass


class UniverseMismatch(SparseBasisError, ValueError):
    pass


class WrongChi(SparseBasisError, ValueError):
    pass


class ChiMismatch(SparseBasisError, ValueError):
    """Traced Euler characteristic differs from the declared one."""


class InvalidParity(SparseBasisError, ValueError):
    pass


class NotTheta(SparseBasisError, ValueError):
    pass


class DomainError(SparseBasisError, ValueError):
    pass


class TooLarge(SparseBasisError, ValueError):
    pass


class FormatError(SparseBasisError, ValueError):
    """File contents do not follow the embedded-graph or basis format."""


class NotFound(SparseBasisError):
    pass


class NonTermination(SparseBasisError):
    pass


class RankDeficit(SparseBasisError):
    pass


class SeparatingCycle(SparseBasisError):
    pass


class PreconditionFailed(SparseBasisError):
    pass


class TheoremViolation(SparseBasisError):
    """A construction that must always succeed did not.

    Parameters
    ----------
    message : str
        What went wrong.
    witness : dict, optional
        Everything known at the point of failure, for dumping.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = dict(witness or {})
