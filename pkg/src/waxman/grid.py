"""Uniform symmetric grids with composite-Simpson quadrature weights.

Every integral in the pipeline is a weighted sum over one of these grids, so
the whole accuracy story lives here: composite Simpson is 4th order, which
lets a moderate point count (a few thousand) push quadrature error well below
the iteration tolerances.  The domain is truncated to [-L, L]; L must be
large enough that exp(-sqrt(eps)*L) is negligible at the working tolerance.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError

#: Half-width used by the bundled potentials and the CLI defaults.
DEFAULT_HALF_WIDTH = 20.0


@dataclass(frozen=True)
class Grid:
    """Uniform symmetric discretization of [-L, L].

    Attributes
    ----------
    half_width : float
        Truncation half-width L.
    npoints : int
        Odd number of abscissae N; N - 1 intervals form (N - 1)/2 Simpson
        panel pairs.
    points : ndarray, shape (N,)
        Strictly increasing abscissae, exactly antisymmetric about 0
        (``points[i] == -points[N-1-i]``); x = 0 is always a grid point.
    weights : ndarray, shape (N,)
        Composite-Simpson weights h/3 * {1, 4, 2, 4, ..., 2, 4, 1}.
    """

    half_width: float
    npoints: int
    points: np.ndarray
    weights: np.ndarray

    @property
    def spacing(self) -> float:
        """Grid step h = 2L / (N - 1)."""
        return 2.0 * self.half_width / (self.npoints - 1)

    def index_of(self, x: float) -> int:
        """Index of the grid point exactly equal to ``x``.

        Raises ConfigurationError if ``x`` is not (exactly) a grid point;
        reference points must coincide with an abscissa, no interpolation.
        """
        h = self.spacing
        i = int(round((x - self.points[0]) / h))
        if not (0 <= i < self.npoints) or self.points[i] != x:
            raise ConfigurationError(
                f"x={x!r} is not a grid point (closest index {i})"
            )
        return i


def make_grid(half_width: float, npoints: int) -> Grid:
    """Build a symmetric uniform grid with composite-Simpson weights.

    Parameters
    ----------
    half_width : float
        Domain half-width L > 0.
    npoints : int
        Odd point count N >= 3 (an even interval count is what composite
        Simpson needs).
    """
    if not half_width > 0.0:
        raise ConfigurationError(f"half_width must be > 0, got {half_width}")
    if npoints < 3:
        raise ConfigurationError(f"npoints must be >= 3, got {npoints}")
    if npoints % 2 == 0:
        raise ConfigurationError(
            f"npoints must be odd for composite Simpson, got {npoints}"
        )

    mid = (npoints - 1) // 2
    h = 2.0 * half_width / (npoints - 1)
    # (i - mid) * h makes the antisymmetry points[i] == -points[N-1-i] exact.
    points = (np.arange(npoints) - mid) * h

    weights = np.full(npoints, 2.0, dtype=float)
    weights[1::2] = 4.0
    weights[0] = weights[-1] = 1.0
    weights *= h / 3.0

    points.setflags(write=False)
    weights.setflags(write=False)
    return Grid(float(half_width), int(npoints), points, weights)


def integrate(grid: Grid, samples) -> float:
    """Quadrature sum of samples given at the grid points.

    ``samples`` must have exactly ``grid.npoints`` entries; anything else is
    a programming error (ValueError), not a numeric failure.
    """
    samples = np.asarray(samples, dtype=float)
    if samples.shape != (grid.npoints,):
        raise ValueError(
            f"expected {grid.npoints} samples, got shape {samples.shape}"
        )
    return float(grid.weights @ samples)
