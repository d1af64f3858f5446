"""Complexified classical phase space of N bosonic modes.

Vectors are complex numpy arrays of length 2N in the canonical Darboux
ordering ``(x_1, p_1, ..., x_N, p_N)``.  Complex conjugation is taken
componentwise in this basis.  Units are fixed by ``HBAR = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import expm

from .errors import DimensionMismatchError, InvalidDimensionError

HBAR = 1.0

_BLOCK = np.array([[0.0, 1.0], [-1.0, 0.0]])


@dataclass(frozen=True, eq=False)
class SymplecticForm:
    """The contravariant form Omega^{ij} = (+) [[0, 1], [-1, 0]] of N modes.

    ``matrix`` raises indices (it appears in J = -hbar Omega sigma);
    ``lower`` is its inverse Omega_{ij}, the two-form that evaluates
    Omega(gamma, gamma') = sum_I p_I x'_I - x_I p'_I.
    """

    n_modes: int
    matrix: np.ndarray

    @property
    def lower(self) -> np.ndarray:
        return -self.matrix

    @property
    def dim(self) -> int:
        return 2 * self.n_modes

    def __call__(self, gamma, delta):
        """Bilinear symplectic product Omega(gamma, delta) (no conjugation)."""
        return np.asarray(gamma) @ self.lower @ np.asarray(delta)


@lru_cache(maxsize=64)
def _omega_matrix(n_modes: int) -> np.ndarray:
    m = np.kron(np.eye(n_modes), _BLOCK)
    m.setflags(write=False)
    return m


def symplectic_form(n_modes: int) -> SymplecticForm:
    if int(n_modes) != n_modes or n_modes < 1:
        raise InvalidDimensionError(f"n_modes must be a positive integer, got {n_modes!r}")
    return SymplecticForm(int(n_modes), _omega_matrix(int(n_modes)))


def n_modes_of(vector_or_matrix) -> int:
    dim = np.shape(vector_or_matrix)[0]
    if dim == 0 or dim % 2:
        raise InvalidDimensionError(f"phase-space dimension must be even and positive, got {dim}")
    return dim // 2


def conjugate(gamma):
    return np.conj(gamma)


def symplectic_product(gamma, delta, form: SymplecticForm | None = None):
    """Complexified product <gamma, delta> = -(i/hbar) Omega(gamma*, delta).

    Conjugate-linear in the first slot.  Either argument may be a matrix of
    column vectors, in which case the matrix of pairwise products is returned
    (this is the Gram matrix when both arguments are the same basis).
    """
    gamma = np.asarray(gamma)
    delta = np.asarray(delta)
    if gamma.shape[0] != delta.shape[0]:
        raise DimensionMismatchError(
            f"vectors live in different phase spaces: {gamma.shape[0]} vs {delta.shape[0]}"
        )
    if form is None:
        form = symplectic_form(n_modes_of(gamma))
    elif form.dim != gamma.shape[0]:
        raise DimensionMismatchError(f"form is {form.dim}-dimensional, vectors are {gamma.shape[0]}")
    return (-1j / HBAR) * (np.conj(gamma).T @ form.lower @ delta)


def pairing_matrix(n_modes: int) -> np.ndarray:
    """Matrix K with <gamma, delta> = gamma^H K delta."""
    return (-1j / HBAR) * symplectic_form(n_modes).lower


def annihilation_basis(n_modes: int) -> np.ndarray:
    """Columns e_I, one per mode, with <e_I, e_J> = delta_IJ and <e_I, e_J*> = 0.

    e_I = (x_I - i p_I)/sqrt(2): the phase-space vector whose operator
    i<e_I, r> is i times the annihilation operator of mode I.  It is the
    +i eigenvector of the vacuum complex structure -Omega.
    """
    symplectic_form(n_modes)
    e = np.zeros((2 * n_modes, n_modes), dtype=complex)
    idx = np.arange(n_modes)
    e[2 * idx, idx] = 1 / np.sqrt(2)
    e[2 * idx + 1, idx] = -1j / np.sqrt(2)
    return e


def mode_pairs(modes: np.ndarray) -> np.ndarray:
    """Interleave positive-norm vectors with their conjugates: [g1, g1*, g2, g2*, ...]."""
    modes = np.asarray(modes, dtype=complex)
    out = np.empty((modes.shape[0], 2 * modes.shape[1]), dtype=complex)
    out[:, 0::2] = modes
    out[:, 1::2] = modes.conj()
    return out


def darboux_from_modes(modes: np.ndarray) -> np.ndarray:
    """Real Darboux columns (x_1, p_1, ...) with gamma_I = (x_I - i p_I)/sqrt(2).

    Requires symplectic-orthonormal ``modes``; then the returned real matrix D
    satisfies D^T Omega_lower D = Omega_lower of N_A modes.
    """
    modes = np.asarray(modes, dtype=complex)
    d = np.empty((modes.shape[0], 2 * modes.shape[1]))
    d[:, 0::2] = np.sqrt(2) * modes.real
    d[:, 1::2] = -np.sqrt(2) * modes.imag
    return d


def fix_phase(vector: np.ndarray, rtol: float = 1e-9) -> np.ndarray:
    """Rotate so the largest-magnitude component is real and positive.

    Components within ``rtol`` of the maximum count as ties; the lowest
    index wins.
    """
    vector = np.asarray(vector, dtype=complex)
    mags = np.abs(vector)
    top = mags.max()
    if top == 0:
        return vector
    k = int(np.flatnonzero(mags >= top * (1 - rtol))[0])
    return vector * (np.conj(vector[k]) / mags[k])


def random_symplectic(n_modes: int, rng: np.random.Generator, scale: float = 0.6) -> np.ndarray:
    """Random real symplectic matrix exp(Omega H) for a random symmetric H."""
    h = rng.normal(scale=scale, size=(2 * n_modes, 2 * n_modes))
    return expm(symplectic_form(n_modes).matrix @ (0.5 * (h + h.T)))
