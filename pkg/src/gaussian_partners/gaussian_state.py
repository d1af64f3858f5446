"""Gaussian states, their restricted complex structure and symplectic spectrum.

A state is stored as the covariance metric sigma_ab (a real symmetric
2N x 2N matrix acting on phase-space vectors) and the mean covector.  With
hbar = 1 the vacuum has sigma = identity.  The restricted complex structure is
J = -hbar Omega sigma; J^2 = -1 exactly for pure states.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import tolerances
from .errors import (
    DimensionMismatchError,
    NonOrthonormalBasisError,
    NumericalDegeneracyError,
    SingularCovarianceError,
)
from .phase_space import (
    HBAR,
    SymplecticForm,
    annihilation_basis,
    fix_phase,
    n_modes_of,
    random_symplectic,
    symplectic_form,
    symplectic_product,
)


@dataclass(frozen=True, eq=False)
class GaussianState:
    covariance: np.ndarray
    mean: np.ndarray = None  # type: ignore[assignment]

    def __post_init__(self):
        cov = np.array(self.covariance, dtype=float)
        if cov.ndim != 2 or cov.shape[0] != cov.shape[1]:
            raise DimensionMismatchError(f"covariance must be square, got shape {cov.shape}")
        n = n_modes_of(cov)
        mean = np.zeros(2 * n) if self.mean is None else np.array(self.mean, dtype=float)
        if mean.shape != (2 * n,):
            raise DimensionMismatchError(f"mean has shape {mean.shape}, expected ({2 * n},)")
        cov.setflags(write=False)
        mean.setflags(write=False)
        object.__setattr__(self, "covariance", cov)
        object.__setattr__(self, "mean", mean)

    @property
    def n_modes(self) -> int:
        return self.covariance.shape[0] // 2

    @property
    def form(self) -> SymplecticForm:
        return symplectic_form(self.n_modes)


@dataclass(frozen=True, eq=False)
class ComplexStructure:
    """A real linear map on phase space of the form J = -hbar Omega sigma."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatchError(f"J must be square, got shape {m.shape}")
        n_modes_of(m)
        if np.iscomplexobj(m):
            if np.abs(m.imag).max() > 1e-10 * max(1.0, np.abs(m).max()):
                raise ValueError("J must be a real map in the canonical basis")
            m = m.real
        m = np.array(m, dtype=float)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def n_modes(self) -> int:
        return self.matrix.shape[0] // 2

    @property
    def form(self) -> SymplecticForm:
        return symplectic_form(self.n_modes)

    def __matmul__(self, other):
        return self.matrix @ other


@dataclass(frozen=True, eq=False)
class SymplecticSpectrum:
    """Symplectic eigenvalues nu_I (ascending) and eigenvectors e_I (columns).

    J e_I = i nu_I e_I with <e_I, e_J> = delta_IJ and <e_I, e_J*> = 0.
    """

    nu: np.ndarray
    modes: np.ndarray

    @property
    def pairs(self) -> list[tuple[float, np.ndarray]]:
        return [(float(v), self.modes[:, i]) for i, v in enumerate(self.nu)]

    def groups(self, degeneracy: float | None = None) -> list[tuple[float, np.ndarray]]:
        """Group degenerate eigenvalues: [(nu, column indices), ...]."""
        if degeneracy is None:
            degeneracy = tolerances.get().degeneracy
        out: list[tuple[float, list[int]]] = []
        for i, v in enumerate(self.nu):
            if out and abs(v - out[-1][0]) <= degeneracy * max(1.0, out[-1][0]):
                out[-1][1].append(i)
            else:
                out.append((float(v), [i]))
        return [(v, np.array(idx)) for v, idx in out]


@dataclass(frozen=True)
class ValidityReport:
    is_symmetric: bool
    is_positive_definite: bool
    min_symplectic_eigenvalue: float
    is_physical: bool
    is_pure: bool
    purity: float = field(default=float("nan"))


def complex_structure(state: GaussianState) -> ComplexStructure:
    return ComplexStructure(-HBAR * state.form.matrix @ state.covariance)


def covariance_of(J: ComplexStructure) -> np.ndarray:
    """sigma(., .) = -hbar^-1 Omega(., J .), i.e. sigma = Omega J / hbar as matrices."""
    return J.form.matrix @ J.matrix / HBAR


def _sqrt_and_inverse_sqrt(sigma: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    w, u = np.linalg.eigh(sigma)
    if w[0] <= 1e-14 * max(1.0, w[-1]):
        raise NumericalDegeneracyError(
            f"covariance is not positive definite (smallest eigenvalue {w[0]:.3e})"
        )
    root = np.sqrt(w)
    return (u * root) @ u.T, (u / root) @ u.T


def symplectic_spectrum(J: ComplexStructure) -> SymplecticSpectrum:
    """Eigenpairs (nu_I, e_I) of J with eigenvalue +i nu_I, symplectic-normalized.

    J is similar, via sigma^{1/2}, to the real antisymmetric matrix
    -sigma^{1/2} Omega sigma^{1/2}; diagonalizing that Hermitian-izable form
    keeps degenerate eigenspaces orthonormal, which the partner formulas rely on.
    """
    sigma = covariance_of(J)
    scale = max(1.0, np.abs(sigma).max())
    if np.abs(sigma - sigma.T).max() > 1e-9 * scale:
        raise NumericalDegeneracyError("J is not of the form -Omega sigma with symmetric sigma")
    sigma = 0.5 * (sigma + sigma.T)
    half, inv_half = _sqrt_and_inverse_sqrt(sigma)
    n = J.n_modes
    herm = 1j * HBAR * half @ J.form.matrix @ half
    herm = 0.5 * (herm + herm.conj().T)
    w, v = np.linalg.eigh(herm)
    nu = w[n:]
    if nu[0] <= 0:
        raise NumericalDegeneracyError("J has a vanishing symplectic eigenvalue")
    modes = (inv_half @ v[:, n:]) * np.sqrt(nu)
    modes = np.column_stack([fix_phase(modes[:, i]) for i in range(n)])

    residual = np.abs(J.matrix @ modes - 1j * modes * nu).max()
    if residual > 1e-9 * max(1.0, np.abs(J.matrix).max()) * max(1.0, np.abs(modes).max()):
        raise NumericalDegeneracyError(f"eigenvector residual {residual:.3e} too large")
    nu.setflags(write=False)
    modes.setflags(write=False)
    return SymplecticSpectrum(nu, modes)


def purity(J: ComplexStructure) -> float:
    """Tr rho^2 = prod_I 1/nu_I (equivalently 1/sqrt(det J))."""
    return float(np.prod(1.0 / symplectic_spectrum(J).nu))


def is_pure(J: ComplexStructure, tol: float | None = None) -> bool:
    tol = tolerances.get().purity if tol is None else tol
    return purity(J) >= 1 - tol


def _min_symplectic_eigenvalue(sigma: np.ndarray) -> float:
    # works for indefinite sigma too: |eigenvalues of i Omega sigma|
    om = symplectic_form(n_modes_of(sigma)).matrix
    return float(np.abs(np.linalg.eigvals(1j * om @ sigma)).min())


def validate_state(state: GaussianState) -> ValidityReport:
    tol = tolerances.get()
    sigma = state.covariance
    scale = max(1.0, np.abs(sigma).max())
    symmetric = bool(np.abs(sigma - sigma.T).max() <= tol.atol * scale)
    sym = 0.5 * (sigma + sigma.T)
    eig = np.linalg.eigvalsh(sym)
    positive = bool(eig[0] > tol.atol * scale)
    nu_min = _min_symplectic_eigenvalue(sym)
    physical = symmetric and positive and nu_min >= 1 - tol.physical
    pur = float("nan")
    pure = False
    if physical:
        pur = purity(complex_structure(GaussianState(sym, state.mean)))
        pure = pur >= 1 - tol.purity
    return ValidityReport(symmetric, positive, nu_min, physical, pure, pur)


def wigner_density(state: GaussianState, point) -> float:
    point = np.asarray(point, dtype=float)
    if point.shape != state.mean.shape:
        raise DimensionMismatchError(f"point has shape {point.shape}, expected {state.mean.shape}")
    sigma = state.covariance
    det = np.linalg.det(sigma)
    if not det > 0 or np.linalg.cond(sigma) > 1e14:
        raise SingularCovarianceError("Wigner density needs an invertible covariance")
    d = point - state.mean
    quad = d @ np.linalg.solve(sigma, d)
    return float(np.exp(-quad) / (np.pi**state.n_modes * np.sqrt(det)))


def structure_from_modes(nu, modes) -> ComplexStructure:
    """J = sum_I i nu_I (e_I <e_I, .> + e_I* <e_I*, .>) for a symplectic-orthonormal basis."""
    nu = np.asarray(nu, dtype=float)
    modes = np.asarray(modes, dtype=complex)
    form = symplectic_form(n_modes_of(modes))
    # i nu (e<e,.> + e*<e*,.>) = i nu 2Re(e e^H) (-i Omega_lower) = 2 nu Re(e e^H) Omega_lower
    outer = (modes * nu) @ modes.conj().T
    return ComplexStructure(2 * outer.real @ form.lower / HBAR)


def state_from_spectrum(nu, basis=None, seed: int | None = None) -> GaussianState:
    """Zero-mean state with symplectic eigenvalues ``nu`` and eigenvectors ``basis``.

    With no basis the annihilation basis is used; if a ``seed`` is also given
    that basis is first moved by a random symplectic transformation.
    """
    nu = np.atleast_1d(np.asarray(nu, dtype=float))
    n = len(nu)
    if basis is None:
        basis = annihilation_basis(n)
        if seed is not None:
            basis = random_symplectic(n, np.random.default_rng(seed)) @ basis
    basis = np.asarray(basis, dtype=complex)
    if basis.shape != (2 * n, n):
        raise DimensionMismatchError(f"basis must have shape {(2 * n, n)}, got {basis.shape}")
    gram = symplectic_product(basis, basis)
    cross = symplectic_product(basis, basis.conj())
    err = max(np.abs(gram - np.eye(n)).max(), np.abs(cross).max())
    if err > 1e-9:
        raise NonOrthonormalBasisError(f"basis is not symplectic-orthonormal (error {err:.2e})")
    J = structure_from_modes(nu, basis)
    sigma = covariance_of(J)
    return GaussianState(0.5 * (sigma + sigma.T))


def vacuum(n_modes: int) -> GaussianState:
    return GaussianState(np.eye(2 * symplectic_form(n_modes).n_modes))


def thermal(nu) -> GaussianState:
    nu = np.atleast_1d(np.asarray(nu, dtype=float))
    return GaussianState(np.diag(np.repeat(nu, 2)))


def two_mode_squeezed(r: float, nu: float = 1.0) -> GaussianState:
    """Two-mode squeezed thermal state; pure for nu = 1."""
    c, s = np.cosh(2 * r), np.sinh(2 * r)
    z = np.diag([1.0, -1.0])
    return GaussianState(nu * np.block([[c * np.eye(2), s * z], [s * z, c * np.eye(2)]]))


def random_state(n_modes: int, rng: np.random.Generator, *, pure: bool = False,
                 max_excess: float = 1.5, squeezing: float = 0.6) -> GaussianState:
    """Random physical state sigma = S^T diag(nu, nu) S with S random symplectic."""
    nu = np.ones(n_modes) if pure else 1 + rng.uniform(0, max_excess, n_modes)
    s = random_symplectic(n_modes, rng, scale=squeezing)
    sigma = s.T @ np.diag(np.repeat(nu, 2)) @ s
    return GaussianState(0.5 * (sigma + sigma.T))
