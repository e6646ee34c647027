"""Dense complex linear algebra with explicit, checked tolerance contracts.

Thin layer over LAPACK (through numpy/scipy). Every routine validates its
input, and by default verifies the advertised accuracy contract of its
output, so downstream spectral claims rest on checked decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DimensionError, HermiticityError, ScalingError, SolverError

__all__ = [
    "NumericSettings",
    "DEFAULT_SETTINGS",
    "EigenDecomposition",
    "SvdDecomposition",
    "eig_general",
    "eig_hermitian",
    "svd",
    "expm",
    "condition_number",
    "hermitian_aligned",
]


@dataclass(frozen=True)
class NumericSettings:
    """Tolerances threaded through every linear-algebra and spectral call.

    All relative tolerances are measured against the Frobenius norm of the
    input unless stated otherwise.
    """

    eig_residual_rtol: float = 1e-10
    hermiticity_rtol: float = 1e-12
    orthonormality_tol: float = 1e-10
    svd_reconstruction_rtol: float = 1e-10
    # |lambda| <= steady_state_rtol * ||L||_F marks a null (steady) mode
    steady_state_rtol: float = 1e-9
    # Re(lambda) <= stability_rtol * ||L||_F is tolerated as roundoff
    stability_rtol: float = 1e-10
    # eigenvalue floor when checking steady-state positivity (absolute)
    psd_floor: float = -1e-10
    # |mu| <= 1 + growth_rtol allowed for transfer-matrix eigenvalues;
    # loose enough for roundoff on poorly conditioned kept directions
    growth_rtol: float = 1e-6
    # refuse dense full diagonalisation above this matrix dimension
    max_dense_dim: int = 2048
    # verify residual/orthonormality/reconstruction contracts on output
    check_contracts: bool = True


DEFAULT_SETTINGS = NumericSettings()


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues with unit-norm right (and optionally left) eigenvectors."""

    eigenvalues: np.ndarray
    right_vectors: np.ndarray
    left_vectors: np.ndarray | None = None


@dataclass(frozen=True)
class SvdDecomposition:
    """Singular value decomposition a = U diag(s) Vh, s sorted descending."""

    singular_values: np.ndarray
    left_vectors: np.ndarray
    right_vectors_h: np.ndarray


def as_complex_matrix(a, name: str = "matrix") -> np.ndarray:
    """Return a as a 2d complex array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionError(f"{name} must be 2-dimensional, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError(f"{name} contains non-finite entries")
    return m


def as_square_matrix(a, name: str = "matrix") -> np.ndarray:
    m = as_complex_matrix(a, name)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {m.shape}")
    return m


def hermiticity_deviation(m: np.ndarray) -> float:
    """Relative Frobenius deviation of m from its own adjoint."""
    scale = np.linalg.norm(m)
    if scale == 0.0:
        return 0.0
    return float(np.linalg.norm(m - m.conj().T) / scale)


def eig_general(
    a, settings: NumericSettings = DEFAULT_SETTINGS, want_left: bool = False
) -> EigenDecomposition:
    """Diagonalise a general complex square matrix.

    Eigenvectors come back with unit norm. With check_contracts enabled the
    per-pair residual ||a v - lambda v|| is verified against
    eig_residual_rtol * ||a||_F; defective inputs still satisfy this because
    LAPACK returns repeated directions for repeated eigenvalues.
    """
    m = as_square_matrix(a)
    try:
        if want_left:
            vals, vl, vr = scipy.linalg.eig(m, left=True, right=True)
        else:
            vals, vr = scipy.linalg.eig(m)
            vl = None
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"eigendecomposition did not converge: {exc}") from exc
    vr = vr / np.linalg.norm(vr, axis=0, keepdims=True)
    if settings.check_contracts:
        residual = np.linalg.norm(m @ vr - vr * vals[None, :], axis=0)
        bound = settings.eig_residual_rtol * max(np.linalg.norm(m), 1e-300)
        worst = int(np.argmax(residual))
        if residual[worst] > bound:
            raise SolverError(
                f"eigenpair {worst} residual {residual[worst]:.3e} exceeds {bound:.3e}"
            )
    return EigenDecomposition(vals, vr, vl)


def eig_hermitian(a, settings: NumericSettings = DEFAULT_SETTINGS) -> EigenDecomposition:
    """Diagonalise a Hermitian matrix; eigenvalues ascending and real.

    Raises HermiticityError when the input deviates from its adjoint by more
    than hermiticity_rtol in relative Frobenius norm.
    """
    m = as_square_matrix(a)
    dev = hermiticity_deviation(m)
    if dev > settings.hermiticity_rtol:
        raise HermiticityError(f"input deviates from Hermitian by {dev:.3e} relative")
    try:
        vals, vecs = scipy.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"Hermitian eigendecomposition failed: {exc}") from exc
    if settings.check_contracts:
        gram = vecs.conj().T @ vecs
        dev_orth = np.linalg.norm(gram - np.eye(m.shape[0]))
        if dev_orth > settings.orthonormality_tol:
            raise SolverError(f"eigenbasis orthonormality defect {dev_orth:.3e}")
    return EigenDecomposition(vals.astype(complex), vecs)


def svd(a, settings: NumericSettings = DEFAULT_SETTINGS) -> SvdDecomposition:
    """Singular value decomposition with a verified reconstruction bound."""
    m = as_complex_matrix(a)
    try:
        u, s, vh = np.linalg.svd(m, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"svd did not converge: {exc}") from exc
    if settings.check_contracts and s.size:
        err = np.linalg.norm(m - (u * s[None, :]) @ vh)
        bound = settings.svd_reconstruction_rtol * max(s[0], 1e-300) * np.sqrt(min(m.shape))
        if err > bound:
            raise SolverError(f"svd reconstruction error {err:.3e} exceeds {bound:.3e}")
    return SvdDecomposition(s, u, vh)


def expm(a, settings: NumericSettings = DEFAULT_SETTINGS) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring (Pade), overflow-checked."""
    m = as_square_matrix(a)
    result = scipy.linalg.expm(m)
    if not np.isfinite(result).all():
        raise ScalingError(
            f"expm overflowed for input with ||a||_F = {np.linalg.norm(m):.3e}"
        )
    return result


def condition_number(a, settings: NumericSettings = DEFAULT_SETTINGS) -> float:
    """sigma_max / sigma_min; +inf marks an exactly singular input."""
    s = svd(a, settings).singular_values
    if s.size == 0 or s[0] == 0.0:
        return float("inf")
    if s[-1] == 0.0:
        return float("inf")
    return float(s[0] / s[-1])


def hermitian_aligned(m: np.ndarray) -> np.ndarray:
    """Hermitian part of m after removing its global phase.

    Writing e^{-i phi} m = H + i A with H, A Hermitian, the phi maximizing
    ||H||_F is solved in closed form and cos(phi) H + sin(phi) A returned.
    For a matrix that is Hermitian up to a phase (eigenmode conventions
    leave the phase arbitrary) this recovers the Hermitian representative
    instead of destroying it, which plain (m + m+)/2 does near phi = pi/2.
    """
    mat = as_square_matrix(m, "matrix")
    herm = 0.5 * (mat + mat.conj().T)
    anti = (mat - mat.conj().T) / 2j
    h2 = float(np.linalg.norm(herm)) ** 2
    a2 = float(np.linalg.norm(anti)) ** 2
    cross = float(np.trace(herm @ anti).real)
    phi = 0.5 * np.arctan2(2.0 * cross, h2 - a2)
    return float(np.cos(phi)) * herm + float(np.sin(phi)) * anti
