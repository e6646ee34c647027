"""Truncated bosonic-mode operators and the Kerr-cat Hamiltonian.

Everything lives in the photon-number basis |0>..|N-1|. Truncation is a
hard cutoff: operators act exactly on the subspace n < N-1 and tests pin
the single artifact entry of [a, a+] at (N-1, N-1).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, TruncationWarning

__all__ = [
    "FockSpace",
    "FockOperator",
    "KerrCatParams",
    "destroy",
    "number",
    "identity",
    "parity",
    "kerr_cat_hamiltonian",
    "coherent_state",
    "cat_state",
    "logical_operators",
]

# untruncated probability mass allowed beyond the top Fock level
TAIL_WEIGHT_TOL = 1e-8


@dataclass(frozen=True)
class FockSpace:
    """Photon-number basis truncated to n_levels states."""

    n_levels: int

    def __post_init__(self) -> None:
        if self.n_levels < 2:
            raise ValueError(f"n_levels must be >= 2, got {self.n_levels}")


@dataclass(frozen=True)
class FockOperator:
    """A dense operator tied to its truncated space."""

    space: FockSpace
    matrix: np.ndarray

    def __post_init__(self) -> None:
        n = self.space.n_levels
        if self.matrix.shape != (n, n):
            raise DimensionError(
                f"operator matrix is {self.matrix.shape}, space needs ({n}, {n})"
            )

    def dag(self) -> "FockOperator":
        return FockOperator(self.space, self.matrix.conj().T)

    def __matmul__(self, other: "FockOperator") -> "FockOperator":
        if other.space != self.space:
            raise DimensionError("operators live on different spaces")
        return FockOperator(self.space, self.matrix @ other.matrix)

    def __add__(self, other: "FockOperator") -> "FockOperator":
        if other.space != self.space:
            raise DimensionError("operators live on different spaces")
        return FockOperator(self.space, self.matrix + other.matrix)

    def __sub__(self, other: "FockOperator") -> "FockOperator":
        if other.space != self.space:
            raise DimensionError("operators live on different spaces")
        return FockOperator(self.space, self.matrix - other.matrix)

    def __rmul__(self, scalar: complex) -> "FockOperator":
        return FockOperator(self.space, scalar * self.matrix)


@dataclass(frozen=True)
class KerrCatParams:
    """Kerr resonator with two-photon drive and single-photon loss.

    All rates are in units of the loss rate; delta is the detuning, kerr
    the nonlinearity K, drive the two-photon amplitude g, kappa_1ph the
    single-photon loss rate.
    """

    delta: float = 0.2
    kerr: float = 0.05
    drive: float = 0.0
    kappa_1ph: float = 1.0

    def __post_init__(self) -> None:
        if self.kerr <= 0.0:
            raise ValueError(f"kerr must be positive, got {self.kerr}")
        if self.kappa_1ph < 0.0:
            raise ValueError(f"kappa_1ph must be >= 0, got {self.kappa_1ph}")


def destroy(space: FockSpace) -> FockOperator:
    """Annihilation operator: <n-1|a|n> = sqrt(n)."""
    n = space.n_levels
    m = np.zeros((n, n), dtype=complex)
    m[np.arange(n - 1), np.arange(1, n)] = np.sqrt(np.arange(1, n))
    return FockOperator(space, m)


def number(space: FockSpace) -> FockOperator:
    """Photon-number operator diag(0, 1, ..., N-1)."""
    return FockOperator(space, np.diag(np.arange(space.n_levels, dtype=complex)))


def identity(space: FockSpace) -> FockOperator:
    return FockOperator(space, np.eye(space.n_levels, dtype=complex))


def parity(space: FockSpace) -> FockOperator:
    """Photon-number parity diag((-1)^n)."""
    signs = 1.0 - 2.0 * (np.arange(space.n_levels) % 2)
    return FockOperator(space, np.diag(signs.astype(complex)))


def kerr_cat_hamiltonian(space: FockSpace, p: KerrCatParams) -> FockOperator:
    """H = delta a+a - K a+^2 a^2 + g (a+^2 + a^2), Hermitian by assembly."""
    n = np.arange(space.n_levels, dtype=float)
    h = np.diag((p.delta * n - p.kerr * n * (n - 1.0)).astype(complex))
    a2 = destroy(space).matrix @ destroy(space).matrix
    h += p.drive * (a2.conj().T + a2)
    return FockOperator(space, h)


def coherent_state(space: FockSpace, alpha: complex) -> np.ndarray:
    """Truncated coherent state, renormalized to unit norm.

    Amplitudes follow the recurrence c_{n+1} = alpha/sqrt(n+1) c_n seeded
    by exp(-|alpha|^2/2), so no factorial overflows. Warns when the weight
    beyond the top level exceeds TAIL_WEIGHT_TOL.
    """
    n = space.n_levels
    c = np.zeros(n, dtype=complex)
    c[0] = math.exp(-0.5 * abs(alpha) ** 2)
    for k in range(1, n):
        c[k] = c[k - 1] * alpha / math.sqrt(k)
    captured = float(np.vdot(c, c).real)
    tail = max(0.0, 1.0 - captured)
    if tail > TAIL_WEIGHT_TOL:
        warnings.warn(
            f"coherent state |alpha|^2 = {abs(alpha) ** 2:.3g} leaves weight "
            f"{tail:.3e} beyond n = {n - 1}",
            TruncationWarning,
            stacklevel=2,
        )
    return c / math.sqrt(captured)


def cat_state(space: FockSpace, alpha: complex, sign: int) -> np.ndarray:
    """Normalized superposition |alpha> + sign |-alpha>, sign in {+1, -1}."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    psi = coherent_state(space, alpha) + sign * coherent_state(space, -alpha)
    norm = float(np.linalg.norm(psi))
    # the odd combination vanishes identically as alpha -> 0
    if norm < 1e-12:
        raise ValueError(f"cat state with sign {sign:+d} degenerates at alpha = {alpha}")
    return psi / norm


def logical_operators(space: FockSpace, alpha: float) -> tuple[FockOperator, FockOperator]:
    """Cat-qubit logical pair (Z, X) = (a / alpha, parity)."""
    if alpha == 0.0:
        raise ZeroDivisionError("logical Z = a / alpha needs alpha != 0")
    if alpha < 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    z = FockOperator(space, destroy(space).matrix / alpha)
    return z, parity(space)
