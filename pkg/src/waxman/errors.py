"""Exception hierarchy shared by all waxman modules.

Two families are kept apart on purpose: :class:`ConfigurationError` covers
invalid user input (bad grid sizes, malformed tables, impossible settings)
and maps to CLI exit code 1, while :class:`NumericError` covers failures of
the computation itself (vanishing denominators, degenerate fits, missing
bound states) and maps to CLI exit code 2.  Plain ``ValueError`` is reserved
for programming errors such as mismatched array lengths.
"""


class ConfigurationError(ValueError):
    """Invalid configuration or input data; raised before any computation."""


class NumericError(RuntimeError):
    """Base class for failures of a numerical procedure."""


class DenominatorVanished(NumericError):
    """The normalization integral at x_ref is numerically zero.

    Signals a bad initial guess (orthogonal to the ground state) or a
    potential with no weight where the wavefunction is pinned.
    """


class NonFinite(NumericError):
    """A sample array contains NaN or Inf; the message names the first index."""


class NonPositiveTail(NumericError):
    """Tail-decay fit requested on a window containing non-positive samples."""


class DegenerateSamples(NumericError):
    """Too few distinct energy samples to determine the model coefficients."""


class IllConditioned(NumericError):
    """Sample energies are too close for a reliable coefficient fit."""


class OutOfRange(NumericError):
    """Target coupling lies below the model's minimum on the search bracket."""


class NonMonotone(NumericError):
    """Model is not monotone increasing on the inversion bracket."""


class NoBoundState(NumericError):
    """The reference eigensolver found no negative eigenvalue at this coupling."""


class SolverFailure(NumericError):
    """Base for driver-level failures that carry a partial report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ModelInversionFailed(SolverFailure):
    """Model could not be inverted for the requested coupling target."""


class SolveCapExceeded(SolverFailure):
    """Inversion loop hit the full-solve cap before reaching tolerance."""


class BracketInvalid(SolverFailure):
    """Bisection bracket does not enclose the coupling target."""
