"""Shared exception types.

Everything a caller can trigger with legitimate-but-impossible input derives
from LieContractError; InternalInvariantViolation marks identities that are
guaranteed to hold and therefore indicate a bug when they fail.
"""


class LieContractError(Exception):
    """Base class for domain errors raised by this library."""


class DimensionMismatch(LieContractError):
    """Operands live in spaces of different dimension or truncation order."""


class NotASubalgebra(LieContractError):
    """A candidate span is not closed under the bracket.

    ``witness`` is a triple ``(u, v, w)`` with ``w = [u, v]`` outside the span.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SingularFamily(LieContractError):
    """The rescaling family has identically vanishing determinant."""


class PoleError(LieContractError):
    """A rescaled bracket has a pole at 0: the contraction limit does not exist.

    ``valuation`` is the most negative epsilon-valuation encountered,
    ``component`` the offending coordinate index, and ``pair`` (optional) the
    basis pair whose bracket produced the pole.
    """

    def __init__(self, message, valuation, component, pair=None):
        super().__init__(message)
        self.valuation = valuation
        self.component = component
        self.pair = pair


class NonzeroConstantTerm(LieContractError):
    """An operation requiring a curve through zero got a nonzero value at 0."""


class ConstantTermNotIdentity(LieContractError):
    """A truncated logarithm needs the identity matrix at order zero."""


class OrderCapExceeded(LieContractError):
    """A truncation order exceeds the configured cap."""


class DecompositionFailed(LieContractError):
    """A matrix could not be written in the span of representation matrices."""


class UnknownAlgebra(LieContractError):
    """Requested catalogue entry does not exist."""


class SpecFormatError(LieContractError):
    """Malformed input file or literal."""


class InternalInvariantViolation(RuntimeError):
    """A guaranteed identity failed; indicates a bug, not a user error."""
