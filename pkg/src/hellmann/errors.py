"""Exception hierarchy shared across the package.

Two families matter to callers: ``DomainError`` (bad inputs, violated
preconditions) and ``NumericalError`` (an algorithm that received valid
inputs failed to converge or produced garbage).  The CLI maps them to
distinct exit codes.
"""


class HellmannError(Exception):
    """Base class for everything raised deliberately by this package."""


class DomainError(HellmannError, ValueError):
    """Inputs outside an operation's domain (precondition violation)."""


class PoleError(DomainError):
    """A gamma-type function was evaluated at a pole."""


class QuantumNumberError(DomainError):
    """Invalid (n, ell) for the requested potential variant."""


class NonNormalizableError(DomainError):
    """State has no finite norm (decaying exponent not positive)."""


class EvanescentChannelError(DomainError):
    """Phase shift requested below the propagation threshold."""


class NumericalError(HellmannError, RuntimeError):
    """Valid inputs, but the numerical method failed."""


class ConvergenceError(NumericalError):
    """An iteration or series exceeded its term/step budget."""


class BracketError(NumericalError):
    """Eigenvalue search bracket does not contain the requested state."""


class FitResidualError(NumericalError):
    """Asymptotic waveform fit residual exceeded its acceptance bound."""
