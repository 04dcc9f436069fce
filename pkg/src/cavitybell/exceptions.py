"""Error types shared across the package."""


class TruncationError(RuntimeError):
    """An operation would move amplitude past the top Fock level of a truncated mode."""


class NumericalConsistencyError(RuntimeError):
    """A quantity violated a numerical invariant (Hermiticity, trace, positivity, ...)."""


class UnnormalizableStateError(ValueError):
    """A state or density matrix with (near-)zero weight cannot be normalized."""


class OutcomeImpossibleError(RuntimeError):
    """Conditioning was requested on a measurement outcome of (near-)zero probability."""
