"""Exception types raised by synla."""


class SynlaError(Exception):
    """Base class for all synla errors."""


class DimensionError(SynlaError, ValueError):
    """Operands have incompatible shapes."""


class NotSymmetricError(SynlaError, ValueError):
    """Input matrix is asymmetric beyond tolerance or not finite."""


class NotPositiveError(SynlaError, ValueError):
    """Input is required to be positive semidefinite but is not."""


class NotInvertibleError(SynlaError, ValueError):
    """Input has eigenvalues below the rank cutoff."""


class NotProjectionError(SynlaError, ValueError):
    """Input is not an idempotent symmetric matrix."""


class NotEffectError(SynlaError, ValueError):
    """Input does not satisfy 0 <= e <= 1."""


class NonCommutativeError(SynlaError, ValueError):
    """A commutativity precondition failed.

    ``pair`` holds the indices (or names) of the offending operands when known.
    """

    def __init__(self, message, pair=None, commutator_norm=None):
        super().__init__(message)
        self.pair = pair
        self.commutator_norm = commutator_norm


class NotMemberError(SynlaError, ValueError):
    """An element is not a member of the given subspace."""


class ConsistencyError(SynlaError, RuntimeError):
    """A built-in self-check of a mathematical identity failed.

    This indicates either a bug or a tolerance policy that is too tight for the
    conditioning of the input.
    """


class PreconditionError(SynlaError, ValueError):
    """An operation's stated precondition does not hold; the message names it."""
