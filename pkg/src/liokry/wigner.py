"""Phase-space maps via displaced-parity expectation values.

W(x, p) = (2/pi) Tr[rho D(alpha) Pi D(-alpha)] with alpha = x + i p, so a
coherent state |a0> peaks at (Re a0, Im a0) with maximum 2/pi. Displaced
parity is exact under truncation; the input state is zero-padded into a
larger space sized from the grid reach before any displacement is built,
because displacing by |alpha| inside a space barely holding the state
produces pure truncation junk at the grid edges.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import numerics
from .errors import CoverageWarning, HermiticityError, SolverError
from .numerics import DEFAULT_SETTINGS, NumericSettings

__all__ = ["PhaseSpaceGrid", "WignerMap", "wigner_of"]

_trapezoid = getattr(np, "trapezoid", None) or np.trapz

# extra vacuum widths of padding beyond grid reach plus state spread
PAD_MARGIN = 3.0


@dataclass(frozen=True)
class PhaseSpaceGrid:
    """Uniform rectangular grid in the dimensionless quadratures."""

    x_points: int = 121
    p_points: int = 121
    x_range: tuple[float, float] = (-6.0, 6.0)
    p_range: tuple[float, float] = (-6.0, 6.0)

    def __post_init__(self) -> None:
        if self.x_points < 2 or self.p_points < 2:
            raise ValueError("grids need at least 2 points per axis")
        for name, (lo, hi) in (("x_range", self.x_range), ("p_range", self.p_range)):
            if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
                raise ValueError(f"{name} must be a finite nonempty interval, got {(lo, hi)}")

    def x_values(self) -> np.ndarray:
        return np.linspace(self.x_range[0], self.x_range[1], self.x_points)

    def p_values(self) -> np.ndarray:
        return np.linspace(self.p_range[0], self.p_range[1], self.p_points)


@dataclass(frozen=True)
class WignerMap:
    """Real quasi-probability values, indexed values[ix, ip]."""

    grid: PhaseSpaceGrid
    values: np.ndarray

    def __post_init__(self) -> None:
        shape = (self.grid.x_points, self.grid.p_points)
        if self.values.shape != shape:
            raise ValueError(f"values shape {self.values.shape} does not match grid {shape}")
        if not np.isfinite(self.values).all():
            raise ValueError("Wigner values contain non-finite entries")

    def integral(self) -> float:
        """Trapezoid integral over the whole grid; ~1 for a covered state."""
        inner = _trapezoid(self.values, self.grid.p_values(), axis=1)
        return float(_trapezoid(inner, self.grid.x_values()))


def _excitation_reach(rho: np.ndarray) -> float:
    """|diagonal|-weighted mean photon number; equals <a+a> for states."""
    weights = np.abs(np.diag(rho))
    total = weights.sum()
    if total == 0.0:
        return 0.0
    return float((weights * np.arange(rho.shape[0])).sum() / total)


def wigner_of(
    rho: np.ndarray,
    grid: PhaseSpaceGrid | None = None,
    settings: NumericSettings = DEFAULT_SETTINGS,
) -> WignerMap:
    """Evaluate the displaced-parity Wigner map of a Hermitian matrix.

    The displacement splits as D(x + ip) = e^{x(a+ - a)} e^{ip(a+ + a)} up
    to a phase that cancels inside D(alpha) Pi D(-alpha), so the p-side
    parity conjugates are built once and reused across every x row.
    """
    if grid is None:
        grid = PhaseSpaceGrid()
    m = numerics.as_square_matrix(rho, "rho")
    dev = numerics.hermiticity_deviation(m)
    if dev > 1e-10:
        raise HermiticityError(f"rho deviates from Hermitian by {dev:.3e} relative")

    xs = grid.x_values()
    ps = grid.p_values()
    n_eff = _excitation_reach(m)
    reach = min(np.abs(xs).max(), np.abs(ps).max())
    if reach**2 < n_eff:
        warnings.warn(
            f"grid reach {reach:.3g} is below the state's mean photon radius "
            f"sqrt({n_eff:.3g}); the map will miss support",
            CoverageWarning,
            stacklevel=2,
        )

    # pad so displaced states stay representable everywhere on the grid
    corner = math.hypot(np.abs(xs).max(), np.abs(ps).max())
    n_pad = max(m.shape[0], int(math.ceil((corner + PAD_MARGIN + math.sqrt(n_eff)) ** 2)))
    big = np.zeros((n_pad, n_pad), dtype=complex)
    big[: m.shape[0], : m.shape[0]] = m

    lower = np.diag(np.sqrt(np.arange(1, n_pad, dtype=float)), 1).astype(complex)
    gen_x = lower.conj().T - lower
    gen_p = lower.conj().T + lower
    parity_signs = (1.0 - 2.0 * (np.arange(n_pad) % 2)).astype(complex)

    displaced_parity = np.empty((ps.size, n_pad, n_pad), dtype=complex)
    for j, p in enumerate(ps):
        c = numerics.expm(1j * p * gen_p, settings)
        displaced_parity[j] = (c * parity_signs[None, :]) @ c.conj().T

    values = np.empty((xs.size, ps.size), dtype=complex)
    for i, x in enumerate(xs):
        r = numerics.expm(x * gen_x, settings)
        rho_x = r.conj().T @ big @ r
        values[i] = (2.0 / math.pi) * np.einsum("ij,pji->p", rho_x, displaced_parity)

    leak = float(np.abs(values.imag).max())
    if settings.check_contracts and leak > 1e-10:
        raise SolverError(f"imaginary leakage {leak:.3e} in Wigner values")
    return WignerMap(grid, np.ascontiguousarray(values.real))
