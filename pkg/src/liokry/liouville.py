"""Vectorized Lindblad generators and their exact dense spectra.

Density matrices are flattened row-major, so rho -> A rho B becomes
kron(A, B.T) acting on the flattened vector. The full_spectrum_oracle is
the exact reference every subspace estimate is judged against; it is dense
and only feasible for small truncations.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import numerics
from .errors import (
    DegeneracyWarning,
    DimensionError,
    GapUndefinedError,
    HermiticityError,
    OracleError,
    PositivityError,
    StabilityError,
)
from .fock import FockOperator, FockSpace, KerrCatParams, destroy, kerr_cat_hamiltonian
from .numerics import DEFAULT_SETTINGS, NumericSettings

__all__ = [
    "Superket",
    "Superoperator",
    "LiouvilleSpectrum",
    "vectorize",
    "devectorize",
    "hamiltonian_superop",
    "dissipator_superop",
    "kerr_cat_liouvillian",
    "full_spectrum_oracle",
    "non_normality",
    "steady_state",
    "state_fidelity",
]


@dataclass(frozen=True)
class Superket:
    """A flattened N x N operator as a length-N^2 vector."""

    space: FockSpace
    vec: np.ndarray

    def __post_init__(self) -> None:
        n2 = self.space.n_levels**2
        if self.vec.shape != (n2,):
            raise DimensionError(f"superket has shape {self.vec.shape}, expected ({n2},)")
        if not np.isfinite(self.vec).all():
            raise ValueError("superket contains non-finite entries")

    def norm(self) -> float:
        return float(np.linalg.norm(self.vec))


@dataclass(frozen=True)
class Superoperator:
    """Dense N^2 x N^2 matrix acting on superkets."""

    space: FockSpace
    matrix: np.ndarray

    def __post_init__(self) -> None:
        n2 = self.space.n_levels**2
        if self.matrix.shape != (n2, n2):
            raise DimensionError(
                f"superoperator has shape {self.matrix.shape}, expected ({n2}, {n2})"
            )

    def __add__(self, other: "Superoperator") -> "Superoperator":
        if other.space != self.space:
            raise DimensionError("superoperators live on different spaces")
        return Superoperator(self.space, self.matrix + other.matrix)

    def apply(self, s: Superket) -> Superket:
        if s.space != self.space:
            raise DimensionError("superket lives on a different space")
        return Superket(self.space, self.matrix @ s.vec)


@dataclass(frozen=True)
class LiouvilleSpectrum:
    """Exact spectrum, sorted by descending real part.

    steady_state_index points at the null mode, slow_mode_index at the
    eigenvalue whose negated real part is the gap. right_superkets holds
    unit-norm eigenvectors as columns, aligned with eigenvalues.
    """

    eigenvalues: np.ndarray
    right_superkets: np.ndarray
    steady_state_index: int
    slow_mode_index: int
    gap: float
    eigvec_condition: float


def vectorize(m: np.ndarray) -> Superket:
    """Flatten an N x N matrix row-major into a superket."""
    mat = numerics.as_square_matrix(m, "density-like matrix")
    return Superket(FockSpace(mat.shape[0]), mat.reshape(-1))


def devectorize(s: Superket) -> np.ndarray:
    n = s.space.n_levels
    return s.vec.reshape(n, n)


def hamiltonian_superop(
    h: FockOperator, settings: NumericSettings = DEFAULT_SETTINGS
) -> Superoperator:
    """Superoperator of rho -> -i (H rho - rho H) for Hermitian H."""
    dev = numerics.hermiticity_deviation(h.matrix)
    if dev > settings.hermiticity_rtol:
        raise HermiticityError(f"Hamiltonian deviates from Hermitian by {dev:.3e} relative")
    n = h.space.n_levels
    eye = np.eye(n)
    m = -1j * (np.kron(h.matrix, eye) - np.kron(eye, h.matrix.T))
    return Superoperator(h.space, m)


def dissipator_superop(l: FockOperator, rate: float) -> Superoperator:
    """Superoperator of rate * (l rho l+ - {l+ l, rho} / 2)."""
    if rate < 0.0:
        raise ValueError(f"dissipation rate must be >= 0, got {rate}")
    n = l.space.n_levels
    eye = np.eye(n)
    ldl = l.matrix.conj().T @ l.matrix
    m = rate * (
        np.kron(l.matrix, l.matrix.conj())
        - 0.5 * np.kron(ldl, eye)
        - 0.5 * np.kron(eye, ldl.T)
    )
    return Superoperator(l.space, m)


def kerr_cat_liouvillian(
    space: FockSpace, p: KerrCatParams, settings: NumericSettings = DEFAULT_SETTINGS
) -> Superoperator:
    """Kerr-cat generator: coherent part plus single-photon loss."""
    h_part = hamiltonian_superop(kerr_cat_hamiltonian(space, p), settings)
    return h_part + dissipator_superop(destroy(space), p.kappa_1ph)


def _sorted_spectrum(
    l: Superoperator, settings: NumericSettings
) -> tuple[np.ndarray, np.ndarray, float]:
    n2 = l.matrix.shape[0]
    if n2 > settings.max_dense_dim:
        raise DimensionError(
            f"dense spectrum of a {n2} x {n2} matrix exceeds max_dense_dim = "
            f"{settings.max_dense_dim}"
        )
    decomp = numerics.eig_general(l.matrix, settings)
    vals, vecs = decomp.eigenvalues, decomp.right_vectors
    # descending Re, then |Im| ascending so conjugate pairs order stably
    order = np.lexsort((vals.imag, np.abs(vals.imag), -vals.real))
    return vals[order], vecs[:, order], float(np.linalg.norm(l.matrix))


def _null_indices(vals: np.ndarray, tol_ss: float) -> np.ndarray:
    return np.flatnonzero(np.abs(vals) <= tol_ss)


def full_spectrum_oracle(
    l: Superoperator, settings: NumericSettings = DEFAULT_SETTINGS
) -> LiouvilleSpectrum:
    """Dense eigendecomposition with gap extraction.

    Raises OracleError when no eigenvalue sits within the null screen
    (broken trace preservation), StabilityError for a genuinely positive
    real part, and GapUndefinedError when every non-null mode is purely
    oscillatory (no decaying mode, so no gap).
    """
    vals, vecs, scale = _sorted_spectrum(l, settings)
    tol_ss = settings.steady_state_rtol * scale
    tol_re = settings.stability_rtol * scale

    worst = float(vals.real.max(initial=-np.inf))
    if worst > tol_re:
        raise StabilityError(f"eigenvalue with Re = {worst:.3e} exceeds tolerance {tol_re:.3e}")

    null = _null_indices(vals, tol_ss)
    if null.size == 0:
        raise OracleError(
            f"no eigenvalue within {tol_ss:.3e} of zero; generator is not trace preserving"
        )
    if null.size > 1:
        second = np.sort(np.abs(vals[null]))[1]
        warnings.warn(
            f"{null.size} eigenvalues inside the null screen; secondary |lambda| = {second:.3e}",
            DegeneracyWarning,
            stacklevel=2,
        )
    steady = int(null[np.argmin(np.abs(vals[null]))])

    mask = np.ones(vals.size, dtype=bool)
    mask[null] = False
    candidates = np.flatnonzero(mask)
    if candidates.size == 0:
        raise GapUndefinedError("spectrum contains only null modes")
    best_re = vals.real[candidates].max()
    tied = candidates[vals.real[candidates] >= best_re - tol_re]
    slow = int(tied[np.argmin(np.abs(vals.imag[tied]))])
    gap = -float(vals.real[slow])
    if gap <= tol_re:
        raise GapUndefinedError(
            f"slowest non-null mode has Re = {vals.real[slow]:.3e}; no decaying mode"
        )

    kappa_v = numerics.condition_number(vecs, settings)
    return LiouvilleSpectrum(vals, vecs, steady, slow, gap, kappa_v)


def non_normality(l: Superoperator) -> float:
    """Commutator measure ||L+ L - L L+||_F / ||L||_F; zero for normal L."""
    scale = float(np.linalg.norm(l.matrix))
    if scale == 0.0:
        return 0.0
    comm = l.matrix.conj().T @ l.matrix - l.matrix @ l.matrix.conj().T
    return float(np.linalg.norm(comm) / scale)


def steady_state(
    l: Superoperator, settings: NumericSettings = DEFAULT_SETTINGS
) -> Superket:
    """Null mode of the generator, rescaled to unit trace.

    The devectorized output is Hermitized and must be positive
    semidefinite up to the settings.psd_floor eigenvalue floor.
    """
    n = l.space.n_levels
    scale = float(np.linalg.norm(l.matrix))
    left_identity = l.matrix.conj().T @ np.eye(n).reshape(-1)
    if np.linalg.norm(left_identity) > 1e-9 * scale:
        raise OracleError("generator does not preserve the trace; no steady state")

    vals, vecs, _ = _sorted_spectrum(l, settings)
    tol_ss = settings.steady_state_rtol * scale
    null = _null_indices(vals, tol_ss)
    if null.size == 0:
        raise OracleError(f"no eigenvalue within {tol_ss:.3e} of zero")
    if null.size > 1:
        second = np.sort(np.abs(vals[null]))[1]
        warnings.warn(
            f"numerical null space has dimension {null.size}; "
            f"secondary |lambda| = {second:.3e}",
            DegeneracyWarning,
            stacklevel=2,
        )
    idx = int(null[np.argmin(np.abs(vals[null]))])

    rho = vecs[:, idx].reshape(n, n)
    rho = 0.5 * (rho + rho.conj().T)
    tr = np.trace(rho)
    if abs(tr) < 1e-12:
        raise OracleError("null mode is traceless; cannot rescale to a state")
    rho = rho / tr
    lowest = float(np.linalg.eigvalsh(rho).min())
    if lowest < settings.psd_floor:
        raise PositivityError(f"steady state has eigenvalue {lowest:.3e} below the PSD floor")
    return Superket(l.space, rho.reshape(-1))


def state_fidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 of two states."""
    r = numerics.as_square_matrix(rho, "rho")
    s = numerics.as_square_matrix(sigma, "sigma")
    if r.shape != s.shape:
        raise DimensionError(f"state shapes differ: {r.shape} vs {s.shape}")
    w, v = np.linalg.eigh(0.5 * (r + r.conj().T))
    sqrt_r = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    inner = sqrt_r @ s @ sqrt_r
    ev = np.linalg.eigvalsh(0.5 * (inner + inner.conj().T))
    return float(np.sum(np.sqrt(np.clip(ev, 0.0, None))) ** 2)
