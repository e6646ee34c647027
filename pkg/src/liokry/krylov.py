"""Real-time Krylov subspace estimation of Liouvillian spectra.

The basis is the ladder rho_k = exp(L tau)^k rho_0. Columns are stored
unnormalized: the overlap, shifted-overlap and projected-generator
matrices must stay mutually consistent, and the decaying column norms are
themselves a diagnostic. The generalized eigenvalue problem is regularized
by singular-value thresholding of the overlap matrix before whitening.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import numerics
from .errors import (
    AllSingularError,
    DimensionError,
    GapUndefinedError,
    GrowthError,
    OracleError,
    UnderflowError,
    WindingWarning,
)
from .fock import FockSpace
from .liouville import (
    Superket,
    Superoperator,
    devectorize,
    full_spectrum_oracle,
    vectorize,
)
from .numerics import DEFAULT_SETTINGS, NumericSettings

__all__ = [
    "KrylovConfig",
    "KrylovData",
    "GapEstimate",
    "ConditioningRow",
    "build_basis",
    "slice_data",
    "solve_gevp",
    "reconstruct_eigenstate",
    "filter_profile",
    "conditioning_report",
]

METHODS = ("projected_generator", "transfer_matrix")

# columns decayed below this are pure underflow, not signal
NORM_FLOOR = 1e-300


@dataclass(frozen=True)
class KrylovConfig:
    """Subspace dimension, time step, regularization and solve method."""

    dim_d: int
    tau: float
    threshold: float = 1e-12
    method: str = "projected_generator"

    def __post_init__(self) -> None:
        if self.dim_d < 1:
            raise ValueError(f"dim_d must be >= 1, got {self.dim_d}")
        if not self.tau > 0.0:
            raise ValueError(f"tau must be positive, got {self.tau}")
        if not 0.0 < self.threshold < 1.0:
            raise ValueError(f"threshold must lie in (0, 1), got {self.threshold}")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")


@dataclass(frozen=True)
class KrylovData:
    """Raw Krylov matrices; everything downstream derives from these.

    basis holds the D unnormalized ladder columns; overlap[i, j] and
    shifted_overlap[i, j] are <<rho_i|rho_j>> and <<rho_i|rho_{j+1}>>;
    projected_generator[i, j] is <<rho_i|L|rho_j>>. tau and the Frobenius
    norm of L ride along to set tolerance scales at solve time.
    """

    basis: np.ndarray
    overlap: np.ndarray
    projected_generator: np.ndarray
    shifted_overlap: np.ndarray
    column_norms: np.ndarray
    tau: float
    generator_norm: float

    @property
    def dim_d(self) -> int:
        return self.overlap.shape[0]


@dataclass(frozen=True)
class GapEstimate:
    """Ritz spectrum of the regularized problem.

    ritz_values are sorted by descending real part; mode_weights holds the
    matching weight vectors (in the unwhitened basis) as columns. gap is
    None when no decaying mode survives the screens, e.g. for purely
    unitary evolution. filter_weights are the gap mode's weights.
    """

    ritz_values: np.ndarray
    gap: float | None
    kept_rank: int
    cond_s: float
    filter_weights: np.ndarray | None
    mode_weights: np.ndarray
    slow_index: int | None


@dataclass(frozen=True)
class ConditioningRow:
    """One (D, tau) cell of a conditioning study."""

    dim_d: int
    tau: float
    cond_s: float
    kept_rank: int
    gap_krylov: float | None
    gap_oracle: float | None
    eigvec_condition: float | None


def build_basis(
    l: Superoperator,
    rho0: Superket,
    cfg: KrylovConfig,
    settings: NumericSettings = DEFAULT_SETTINGS,
    propagator: np.ndarray | None = None,
) -> KrylovData:
    """Propagate rho0 through D steps of exp(L tau) and form the matrices.

    One dense propagator is exponentiated once and applied repeatedly. A
    caller evolving several initial states under the same (L, tau) may
    pass the exponential in; it must equal expm(L tau). One extra ladder
    column is computed so the shifted overlap matrix is available at full
    dimension.
    """
    if rho0.space != l.space:
        raise DimensionError("initial superket lives on a different space")
    norm0 = rho0.norm()
    if abs(norm0 - 1.0) > 1e-8:
        raise ValueError(f"initial superket must have unit norm, got {norm0!r}")

    d = cfg.dim_d
    if propagator is None:
        propagator = numerics.expm(l.matrix * cfg.tau, settings)
    elif propagator.shape != l.matrix.shape:
        raise DimensionError(
            f"propagator shape {propagator.shape} does not match {l.matrix.shape}"
        )
    ladder = np.empty((rho0.vec.size, d + 1), dtype=complex)
    ladder[:, 0] = rho0.vec
    for k in range(1, d + 1):
        ladder[:, k] = propagator @ ladder[:, k - 1]

    basis = ladder[:, :d]
    column_norms = np.linalg.norm(basis, axis=0)
    # column 0 is rho0 itself, so only the propagated columns can underflow
    if d > 1 and (column_norms[1:] < NORM_FLOOR).all():
        raise UnderflowError(
            f"every propagated Krylov column decayed below {NORM_FLOOR:g}; "
            f"reduce tau or dim_d"
        )

    overlap = basis.conj().T @ basis
    projected = basis.conj().T @ (l.matrix @ basis)
    shifted = basis.conj().T @ ladder[:, 1 : d + 1]
    return KrylovData(
        basis=basis,
        overlap=overlap,
        projected_generator=projected,
        shifted_overlap=shifted,
        column_norms=column_norms,
        tau=cfg.tau,
        generator_norm=float(np.linalg.norm(l.matrix)),
    )


def slice_data(data: KrylovData, dim_d: int) -> KrylovData:
    """Restrict to the leading dim_d ladder columns.

    The result is exactly what build_basis would have produced for the
    smaller dimension, so nested Gram matrices share entries entry-for-
    entry (the interlacing arguments about kappa(S) growth apply exactly).
    """
    if not 1 <= dim_d <= data.dim_d:
        raise ValueError(f"dim_d must lie in [1, {data.dim_d}], got {dim_d}")
    return KrylovData(
        basis=data.basis[:, :dim_d],
        overlap=data.overlap[:dim_d, :dim_d],
        projected_generator=data.projected_generator[:dim_d, :dim_d],
        shifted_overlap=data.shifted_overlap[:dim_d, :dim_d],
        column_norms=data.column_norms[:dim_d],
        tau=data.tau,
        generator_norm=data.generator_norm,
    )


def _whiten(
    data: KrylovData, cfg: KrylovConfig, settings: NumericSettings
) -> tuple[np.ndarray, int, float]:
    """Threshold the overlap spectrum and build the whitening map."""
    decomp = numerics.svd(data.overlap, settings)
    s = decomp.singular_values
    if s[0] <= 0.0:
        raise AllSingularError("overlap matrix is identically zero")
    # below the rank-detection floor the quotient is rounding noise, not a
    # condition number, so report the singularity explicitly
    floor = len(s) * np.finfo(float).eps * s[0]
    cond_s = math.inf if s[-1] <= floor else float(s[0] / s[-1])
    kept = int(np.count_nonzero(s >= cfg.threshold * s[0]))
    if kept == 0:
        raise AllSingularError("no singular value of the overlap survived the threshold")
    w = decomp.left_vectors[:, :kept] / np.sqrt(s[:kept])[None, :]
    return w, kept, cond_s


def solve_gevp(
    data: KrylovData,
    cfg: KrylovConfig,
    settings: NumericSettings = DEFAULT_SETTINGS,
) -> GapEstimate:
    """Regularized projected eigenproblem and gap extraction.

    projected_generator diagonalizes the whitened <<rho_i|L|rho_j>> block,
    giving Liouvillian eigenvalue approximations directly. transfer_matrix
    diagonalizes the whitened one-step overlap instead and maps eigenvalues
    through the principal logarithm; its decay rates are immune to phase
    winding, which only wraps the imaginary part.
    """
    w, kept, cond_s = _whiten(data, cfg, settings)

    if cfg.method == "projected_generator":
        small = w.conj().T @ data.projected_generator @ w
        sub = numerics.eig_general(small, settings)
        lam = sub.eigenvalues
        modes = w @ sub.right_vectors
    else:
        small = w.conj().T @ data.shifted_overlap @ w
        sub = numerics.eig_general(small, settings)
        mu = sub.eigenvalues
        vecs = sub.right_vectors
        excess = float(np.abs(mu).max(initial=0.0)) - 1.0
        if excess > settings.growth_rtol:
            raise GrowthError(
                f"transfer-matrix eigenvalue magnitude exceeds 1 by {excess:.3e}"
            )
        alive = np.abs(mu) > NORM_FLOOR
        mu, vecs = mu[alive], vecs[:, alive]
        logs = np.log(mu)
        if np.any(np.abs(logs.imag) > 0.9 * math.pi):
            warnings.warn(
                "principal-branch logarithm near the cut; imaginary parts may wind",
                WindingWarning,
                stacklevel=2,
            )
        lam = logs / data.tau
        modes = w @ vecs

    scale = data.generator_norm
    tol_re = settings.stability_rtol * scale
    tol_ss = settings.steady_state_rtol * scale

    # positive real parts at this size are thresholding artifacts, not modes
    physical = lam.real <= tol_re
    lam, modes = lam[physical], modes[:, physical]
    order = np.lexsort((lam.imag, np.abs(lam.imag), -lam.real))
    lam, modes = lam[order], modes[:, order]

    gap: float | None = None
    slow: int | None = None
    for i, value in enumerate(lam):
        if abs(value) > tol_ss and -value.real > tol_re:
            gap = -float(value.real)
            slow = i
            break
    weights = modes[:, slow] if slow is not None else None
    return GapEstimate(
        ritz_values=lam,
        gap=gap,
        kept_rank=kept,
        cond_s=cond_s,
        filter_weights=weights,
        mode_weights=modes,
        slow_index=slow,
    )


def reconstruct_eigenstate(data: KrylovData, est: GapEstimate, which: int) -> Superket:
    """Assemble the ritz mode `which` from the ladder columns.

    The devectorized matrix is rotated by the global phase that maximizes
    its Hermitian part (ritz modes come with an arbitrary phase), then
    Hermitized and renormalized, ready for phase-space analysis.
    """
    n_modes = est.ritz_values.size
    if not 0 <= which < n_modes:
        raise IndexError(f"mode index {which} outside [0, {n_modes})")
    raw = data.basis @ est.mode_weights[:, which]
    space = FockSpace(math.isqrt(data.basis.shape[0]))
    m = devectorize(Superket(space, raw))
    rotated = numerics.hermitian_aligned(m)
    norm = float(np.linalg.norm(rotated))
    if norm < 1e-12 * max(np.linalg.norm(raw), 1e-300):
        raise ValueError("ritz mode has no Hermitian component to reconstruct")
    return vectorize(rotated / norm)


def filter_profile(weights: np.ndarray, tau: float, eigenvalues: np.ndarray) -> np.ndarray:
    """Squared filter amplitude |sum_k w_k exp(lambda tau k)|^2 per eigenvalue."""
    w = np.asarray(weights, dtype=complex)
    lam = np.asarray(eigenvalues, dtype=complex)
    steps = np.arange(w.size)
    amplitudes = np.exp(np.outer(lam, tau * steps)) @ w
    return np.abs(amplitudes) ** 2


def conditioning_report(
    l: Superoperator,
    rho0: Superket,
    cfg_grid: list[KrylovConfig],
    settings: NumericSettings = DEFAULT_SETTINGS,
) -> list[ConditioningRow]:
    """kappa(S), kept rank and gap estimates over a (D, tau) grid.

    Configurations sharing a time step reuse one ladder built at the
    largest requested dimension, so their overlap matrices are nested
    principal submatrices of each other. The dense oracle runs once; when
    it has no gap to offer (for example L = 0) the oracle columns are None
    and the kappa(S) study still proceeds.
    """
    if not cfg_grid:
        raise ValueError("cfg_grid must be nonempty")

    try:
        spectrum = full_spectrum_oracle(l, settings)
        gap_oracle: float | None = spectrum.gap
        kappa_v: float | None = spectrum.eigvec_condition
    except (OracleError, GapUndefinedError):
        gap_oracle = None
        kappa_v = None

    ladders: dict[float, KrylovData] = {}
    for tau in {c.tau for c in cfg_grid}:
        d_max = max(c.dim_d for c in cfg_grid if c.tau == tau)
        ladders[tau] = build_basis(l, rho0, KrylovConfig(d_max, tau), settings)

    rows = []
    for cfg in cfg_grid:
        data = slice_data(ladders[cfg.tau], cfg.dim_d)
        est = solve_gevp(data, cfg, settings)
        rows.append(
            ConditioningRow(
                dim_d=cfg.dim_d,
                tau=cfg.tau,
                cond_s=est.cond_s,
                kept_rank=est.kept_rank,
                gap_krylov=est.gap,
                gap_oracle=gap_oracle,
                eigvec_condition=kappa_v,
            )
        )
    return rows
