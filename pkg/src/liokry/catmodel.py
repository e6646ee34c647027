"""Kerr-cat specific analysis: initial-state sampling and mean-field flow.

The sampler produces traceless Hermitian superkets from eigenstates of the
coherent part of the model; these carry no steady-state component, so the
Krylov signal is pure decay. The mean-field order parameter obeys a closed
cubic ODE whose pitchfork marks the onset of the cat regime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import numerics
from .errors import BlowUpError
from .fock import FockSpace, KerrCatParams, kerr_cat_hamiltonian
from .liouville import Superket
from .numerics import DEFAULT_SETTINGS, NumericSettings

__all__ = [
    "TraceZeroSampler",
    "MeanFieldState",
    "OnsetEstimate",
    "sample_initial",
    "mean_field_rhs",
    "mean_field_evolve",
    "steady_photon_number",
    "landau_functional",
    "cat_regime_onset",
]

# |alpha|^2 beyond this is outside anything the Fock truncations used here
# can represent, so the trajectory is declared divergent
BLOWUP_PHOTONS = 300.0


class TraceZeroSampler:
    """Reproducible source of traceless, Hermitian initial superkets.

    Draws combine pairs of Hamiltonian eigenstates, ordered from the top
    of the spectrum where the metastable cat manifold lives under this
    sign convention. Each pair contributes a population imbalance
    c (P_a - P_b) and, unless disabled, a coherence d (|a><b| + |b><a|)
    with c, d uniform on [0, 1]. Instances hold RNG state and are not
    shareable across threads; use derive() for parallel work.
    """

    def __init__(self, seed: int, n_pairs: int = 4, include_coherences: bool = True):
        if n_pairs < 1:
            raise ValueError(f"n_pairs must be >= 1, got {n_pairs}")
        self.seed = seed
        self.n_pairs = n_pairs
        self.include_coherences = include_coherences
        self.eigenbasis: np.ndarray | None = None
        self._rng = np.random.default_rng(seed)
        self._basis_key: tuple[FockSpace, KerrCatParams] | None = None

    def derive(self, offset: int) -> "TraceZeroSampler":
        """Independent sampler with a deterministic derived seed."""
        return TraceZeroSampler(self.seed + offset, self.n_pairs, self.include_coherences)

    def _basis_for(
        self, space: FockSpace, params: KerrCatParams, settings: NumericSettings
    ) -> np.ndarray:
        key = (space, params)
        if self._basis_key != key:
            h = kerr_cat_hamiltonian(space, params)
            decomp = numerics.eig_hermitian(h.matrix, settings)
            # descending: the cat manifold sits at the top of this spectrum
            order = np.argsort(-decomp.eigenvalues.real)
            self.eigenbasis = decomp.right_vectors[:, order]
            self._basis_key = key
        return self.eigenbasis


def sample_initial(
    sampler: TraceZeroSampler,
    space: FockSpace,
    params: KerrCatParams,
    settings: NumericSettings = DEFAULT_SETTINGS,
) -> Superket:
    """Draw one unit-norm, trace-0 superket from the sampler."""
    n = space.n_levels
    if 2 * sampler.n_pairs > n:
        raise ValueError(
            f"{sampler.n_pairs} pairs need {2 * sampler.n_pairs} eigenstates, "
            f"space has {n}"
        )
    basis = sampler._basis_for(space, params, settings)
    m = np.zeros((n, n), dtype=complex)
    for j in range(sampler.n_pairs):
        a = basis[:, 2 * j]
        b = basis[:, 2 * j + 1]
        c = sampler._rng.uniform()
        m += c * (np.outer(a, a.conj()) - np.outer(b, b.conj()))
        if sampler.include_coherences:
            d = sampler._rng.uniform()
            m += d * (np.outer(a, b.conj()) + np.outer(b, a.conj()))
    m = 0.5 * (m + m.conj().T)
    vec = m.reshape(-1)
    return Superket(space, vec / np.linalg.norm(vec))


@dataclass(frozen=True)
class MeanFieldState:
    """Order parameter <a> at one instant."""

    alpha: complex
    time: float

    def __post_init__(self) -> None:
        if not (np.isfinite(self.alpha) and math.isfinite(self.time)):
            raise ValueError("mean-field state must be finite")


@dataclass(frozen=True)
class OnsetEstimate:
    """Smallest drive with a macroscopically occupied mean-field branch.

    g_onset is None when no grid point crosses the threshold. heuristic_g
    is the quarter-of-the-loss-rate reference point kappa / 4.
    """

    g_onset: float | None
    heuristic_g: float
    threshold_fraction: float


def _rhs(alpha: complex | np.ndarray, p: KerrCatParams):
    return (
        1j
        * (
            p.delta * alpha
            + 2.0 * p.kerr * np.abs(alpha) ** 2 * alpha
            - 2.0 * p.drive * np.conj(alpha)
        )
        - 0.5 * p.kappa_1ph * alpha
    )


def mean_field_rhs(s: MeanFieldState, p: KerrCatParams) -> complex:
    """d alpha / dt = i (delta a + 2K |a|^2 a - 2g a*) - kappa/2 a."""
    return complex(_rhs(s.alpha, p))


def mean_field_evolve(
    alpha0: complex,
    p: KerrCatParams,
    t_final: float,
    dt: float | None = None,
    blowup_photons: float = BLOWUP_PHOTONS,
) -> list[MeanFieldState]:
    """Fixed-step RK4 trajectory from alpha0 over [0, t_final].

    dt defaults to 1e-3 units of 1/kappa_1ph (1e-3 absolute for a lossless
    model). The step is rounded so the final state lands exactly on
    t_final. Raises BlowUpError when the photon number leaves any regime a
    truncated Fock simulation could represent.
    """
    if not t_final > 0.0:
        raise ValueError(f"t_final must be positive, got {t_final}")
    if dt is None:
        dt = 1e-3 / p.kappa_1ph if p.kappa_1ph > 0.0 else 1e-3
    if not dt > 0.0:
        raise ValueError(f"dt must be positive, got {dt}")

    n_steps = max(1, round(t_final / dt))
    h = t_final / n_steps
    alpha = complex(alpha0)
    trajectory = [MeanFieldState(alpha, 0.0)]
    for k in range(1, n_steps + 1):
        k1 = _rhs(alpha, p)
        k2 = _rhs(alpha + 0.5 * h * k1, p)
        k3 = _rhs(alpha + 0.5 * h * k2, p)
        k4 = _rhs(alpha + h * k3, p)
        alpha = alpha + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if abs(alpha) ** 2 > blowup_photons:
            raise BlowUpError(
                f"|alpha|^2 = {abs(alpha) ** 2:.3g} at t = {k * h:.3g} exceeds "
                f"{blowup_photons:g}; no Fock truncation in use could hold this state"
            )
        trajectory.append(MeanFieldState(alpha, k * h))
    return trajectory


def _damped_steady_grid(
    gs: np.ndarray,
    kappa: float,
    kerr: float,
    delta: float,
    t_final: float,
    dt: float,
    blowup_photons: float,
) -> np.ndarray:
    """Trailing |alpha|^2 of the damped flow, all drives integrated together."""
    alpha = np.full(gs.size, 0.1, dtype=complex)

    def rhs(a: np.ndarray) -> np.ndarray:
        return (
            1j * (delta * a + 2.0 * kerr * np.abs(a) ** 2 * a - 2.0 * gs * np.conj(a))
            - 0.5 * kappa * a
        )

    n_steps = max(1, round(t_final / dt))
    h = t_final / n_steps
    for k in range(n_steps):
        k1 = rhs(alpha)
        k2 = rhs(alpha + 0.5 * h * k1)
        k3 = rhs(alpha + 0.5 * h * k2)
        k4 = rhs(alpha + h * k3)
        alpha += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if k % 128 == 0 and (np.abs(alpha) ** 2 > blowup_photons).any():
            worst = float((np.abs(alpha) ** 2).max())
            raise BlowUpError(f"|alpha|^2 reached {worst:.3g} during the onset sweep")
    return np.abs(alpha) ** 2


def steady_photon_number(p: KerrCatParams, t_final: float | None = None) -> float:
    """Mean-field steady |alpha|^2 for one parameter point.

    With loss this is the trailing value of the damped flow seeded at a
    small symmetry-breaking amplitude. Without loss the flow is
    conservative and never settles, so the symmetry-broken stationary
    branch max(0, 2g - delta) / (2K) is returned instead.
    """
    if p.kappa_1ph == 0.0:
        return max(0.0, (2.0 * p.drive - p.delta)) / (2.0 * p.kerr)
    horizon = t_final if t_final is not None else 200.0 / p.kappa_1ph
    values = _damped_steady_grid(
        np.array([p.drive], dtype=float),
        p.kappa_1ph,
        p.kerr,
        p.delta,
        horizon,
        0.02 / p.kappa_1ph,
        BLOWUP_PHOTONS,
    )
    return float(values[0])


def landau_functional(alpha: complex, p: KerrCatParams) -> float:
    """Effective potential K/4 |alpha|^4 - g/2 |alpha|^2."""
    r2 = abs(alpha) ** 2
    return 0.25 * p.kerr * r2 * r2 - 0.5 * p.drive * r2


def cat_regime_onset(
    p_grid: list[KerrCatParams], threshold_fraction: float = 0.5
) -> OnsetEstimate:
    """Smallest drive whose steady photon number reaches the cat branch.

    The grid must sweep the drive at fixed loss, Kerr and detuning. A
    point qualifies when steady |alpha|^2 >= threshold_fraction * g / K;
    the onset is the smallest qualifying g, or None if none qualifies.
    """
    if not p_grid:
        raise ValueError("p_grid must be nonempty")
    if not 0.0 < threshold_fraction <= 1.0:
        raise ValueError(f"threshold_fraction must lie in (0, 1], got {threshold_fraction}")
    first = p_grid[0]
    for p in p_grid[1:]:
        if (p.kappa_1ph, p.kerr, p.delta) != (first.kappa_1ph, first.kerr, first.delta):
            raise ValueError("grid must vary only the drive")

    gs = np.array([p.drive for p in p_grid], dtype=float)
    if first.kappa_1ph == 0.0:
        steady = np.maximum(0.0, 2.0 * gs - first.delta) / (2.0 * first.kerr)
    else:
        steady = _damped_steady_grid(
            gs,
            first.kappa_1ph,
            first.kerr,
            first.delta,
            200.0 / first.kappa_1ph,
            0.02 / first.kappa_1ph,
            BLOWUP_PHOTONS,
        )

    targets = threshold_fraction * gs / first.kerr
    qualifying = (gs > 0.0) & (targets > 0.0) & (steady >= targets)
    g_onset = float(gs[qualifying].min()) if qualifying.any() else None
    return OnsetEstimate(
        g_onset=g_onset,
        heuristic_g=0.25 * first.kappa_1ph,
        threshold_fraction=threshold_fraction,
    )
