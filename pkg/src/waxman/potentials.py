"""Attractive potential shapes V(x) >= 0 and their metadata.

The solver treats the potential as lambda * V(x) with lambda > 0, so every
shape here is non-negative and (for the bundled ones) vanishes far from the
origin.  Symmetry about x = 0 matters downstream: it is what collapses the
coupling-energy model to a straight line when the wavefunction is pinned at
x_ref = 0.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from .errors import ConfigurationError
from .grid import DEFAULT_HALF_WIDTH

# Flags are checked at construction against the default domain edge.
_VANISH_RTOL = 1e-10
_SYMMETRY_ATOL = 1e-8


@dataclass(frozen=True)
class Potential:
    """Evaluable potential shape with symmetry/decay metadata.

    ``shape`` maps an ndarray of positions to V values; potentials are
    immutable and cheap to share.
    """

    shape: Callable[[np.ndarray], np.ndarray]
    name: str
    symmetric_about_zero: bool
    singular: bool
    vanishes_at_infinity: bool

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        v = np.asarray(self.shape(x), dtype=float)
        if x.ndim == 0:
            return float(v)
        return v


def _vanishes_on_default_domain(shape, peak: float) -> bool:
    edge = np.asarray([-DEFAULT_HALF_WIDTH, DEFAULT_HALF_WIDTH])
    return bool(np.max(shape(edge)) < _VANISH_RTOL * peak)


def inverted_gaussian() -> Potential:
    """Gaussian well shape V(x) = exp(-x^2 / 2), peak 1 at the origin."""

    def shape(x):
        return np.exp(-0.5 * x * x)

    return Potential(
        shape=shape,
        name="inverted-gaussian",
        symmetric_about_zero=True,
        singular=False,
        vanishes_at_infinity=_vanishes_on_default_domain(shape, 1.0),
    )


def poschl_teller() -> Potential:
    """Poschl-Teller shape V(x) = sech^2(x); analytic ground state at coupling 2."""

    def shape(x):
        return 1.0 / np.cosh(x) ** 2

    return Potential(
        shape=shape,
        name="poschl-teller",
        symmetric_about_zero=True,
        singular=False,
        vanishes_at_infinity=_vanishes_on_default_domain(shape, 1.0),
    )


def square_well(half_width: float) -> Potential:
    """Indicator well: V = 1 on the closed interval |x| <= half_width, else 0.

    The closed-boundary convention is deliberate so tests are deterministic;
    either convention changes integrals only at quadrature-weight level.
    """
    if not half_width > 0.0:
        raise ConfigurationError(
            f"square_well half_width must be > 0, got {half_width}"
        )
    a = float(half_width)

    def shape(x):
        return np.where(np.abs(x) <= a, 1.0, 0.0)

    return Potential(
        shape=shape,
        name=f"square-well({a:g})",
        symmetric_about_zero=True,
        singular=False,
        vanishes_at_infinity=_vanishes_on_default_domain(shape, 1.0),
    )


def tabulated(points) -> Potential:
    """Potential from (x, V) pairs: linear interpolation inside, 0 outside.

    Requires at least 4 rows, strictly increasing x and V >= 0.  The
    symmetry flag is set by comparing the interpolant at mirrored nodes.
    """
    table = np.asarray(points, dtype=float)
    if table.ndim != 2 or table.shape[1] != 2:
        raise ConfigurationError(
            f"tabulated potential needs (x, V) pairs, got shape {table.shape}"
        )
    if table.shape[0] < 4:
        raise ConfigurationError(
            f"tabulated potential needs at least 4 points, got {table.shape[0]}"
        )
    xs, vs = table[:, 0].copy(), table[:, 1].copy()
    if not np.all(np.isfinite(table)):
        raise ConfigurationError("tabulated potential contains non-finite entries")
    if np.any(np.diff(xs) <= 0.0):
        raise ConfigurationError("tabulated potential x values must be strictly increasing")
    if np.any(vs < 0.0):
        raise ConfigurationError("tabulated potential values must be >= 0")
    xs.setflags(write=False)
    vs.setflags(write=False)

    def shape(x):
        return np.interp(x, xs, vs, left=0.0, right=0.0)

    mirrored = np.max(np.abs(shape(-xs) - vs)) <= _SYMMETRY_ATOL
    peak = float(np.max(vs))
    return Potential(
        shape=shape,
        name="tabulated",
        symmetric_about_zero=bool(mirrored),
        singular=False,
        vanishes_at_infinity=peak == 0.0
        or _vanishes_on_default_domain(shape, peak),
    )


def from_table_file(path) -> Potential:
    """Load a tabulated potential from a two-column text file.

    Whitespace-separated "x V" rows; blank lines and '#' comments allowed.
    """
    p = Path(path)
    if not p.is_file():
        raise ConfigurationError(f"potential table not found: {p}")
    rows = []
    for lineno, raw in enumerate(p.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ConfigurationError(
                f"{p}:{lineno}: expected 'x V', got {raw.strip()!r}"
            )
        try:
            rows.append((float(fields[0]), float(fields[1])))
        except ValueError as exc:
            raise ConfigurationError(f"{p}:{lineno}: {exc}") from exc
    if not rows:
        raise ConfigurationError(f"{p}: no data rows")
    return tabulated(rows)


#: Bundled shapes selectable by name (CLI and demos).
BUNDLED = {
    "inverted-gaussian": inverted_gaussian,
    "poschl-teller": poschl_teller,
}


def by_name(name: str) -> Potential:
    """Look up a bundled potential; square-well takes its half-width in ()."""
    if name in BUNDLED:
        return BUNDLED[name]()
    if name.startswith("square-well(") and name.endswith(")"):
        try:
            a = float(name[len("square-well(") : -1])
        except ValueError as exc:
            raise ConfigurationError(f"bad square-well spec {name!r}") from exc
        return square_well(a)
    raise ConfigurationError(
        f"unknown potential {name!r}; bundled: {sorted(BUNDLED)} or 'square-well(a)'"
    )
