"""Subsystems as symplectic subspaces of the complexified phase space.

A bosonic :class:`ModeSubspace` is stored in normalized form: columns
``[g_1, g_1*, g_2, g_2*, ...]`` with ``<g_I, g_J> = delta_IJ`` and
``<g_I, g_J*> = 0``, so its Gram matrix is ``diag(1, -1, 1, -1, ...)``.
Raw user vectors are normalized with :func:`symplectic_gram_schmidt`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import tolerances
from .errors import DegenerateSubspaceError, DimensionMismatchError, NonOrthogonalSubsystemsError
from .gaussian_state import ComplexStructure, GaussianState
from .phase_space import (
    annihilation_basis,
    darboux_from_modes,
    fix_phase,
    mode_pairs,
    n_modes_of,
    pairing_matrix,
    random_symplectic,
    symplectic_form,
    symplectic_product,
)

BOSONIC = "bosonic"
FERMIONIC = "fermionic"


@dataclass(frozen=True, eq=False)
class ModeSubspace:
    basis: np.ndarray
    kind: str = BOSONIC

    def __post_init__(self):
        b = np.array(self.basis, dtype=complex if self.kind == BOSONIC else float)
        if b.ndim != 2 or b.shape[1] % 2:
            raise DimensionMismatchError(f"a subsystem basis needs an even number of columns, got {b.shape}")
        n_modes_of(b)
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @classmethod
    def from_vectors(cls, vectors) -> "ModeSubspace":
        return symplectic_gram_schmidt(vectors)

    @classmethod
    def from_modes(cls, modes) -> "ModeSubspace":
        """Wrap already symplectic-orthonormal positive-norm vectors (given as columns)."""
        return cls(mode_pairs(np.asarray(modes, dtype=complex)))

    @classmethod
    def empty(cls, ambient_modes: int, kind: str = BOSONIC) -> "ModeSubspace":
        return cls(np.zeros((2 * ambient_modes, 0)), kind)

    @property
    def ambient_modes(self) -> int:
        return self.basis.shape[0] // 2

    @property
    def n_modes(self) -> int:
        return self.basis.shape[1] // 2

    @property
    def is_empty(self) -> bool:
        return self.basis.shape[1] == 0

    @property
    def modes(self) -> np.ndarray:
        """The positive-norm vectors g_I (bosonic subspaces only)."""
        self._require(BOSONIC)
        return self.basis[:, 0::2]

    @property
    def darboux(self) -> np.ndarray:
        """Real Darboux columns (x_1, p_1, ...) of the subspace."""
        return darboux_from_modes(self.modes)

    def _require(self, kind: str):
        if self.kind != kind:
            raise TypeError(f"expected a {kind} subspace, got a {self.kind} one")


@dataclass(frozen=True, eq=False)
class SymplecticProjector:
    matrix: np.ndarray
    source: ModeSubspace

    @property
    def complement(self) -> np.ndarray:
        return np.eye(self.matrix.shape[0]) - self.matrix

    def __matmul__(self, other):
        return self.matrix @ other


class UncorrelatedTest(NamedTuple):
    uncorrelated: bool
    residual: float

    def __bool__(self):
        return self.uncorrelated


def _as_columns(vectors) -> np.ndarray:
    if isinstance(vectors, ModeSubspace):
        return vectors.basis
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        return vectors.astype(complex)
    cols = [np.asarray(v, dtype=complex) for v in vectors]
    if not cols:
        raise DimensionMismatchError("no vectors given")
    return np.column_stack(cols)


def gram_matrix(basis) -> np.ndarray:
    b = _as_columns(basis)
    return symplectic_product(b, b)


def symplectic_projector(sub) -> SymplecticProjector:
    """Pi(.) = sum_ij xi_i B_ij <xi_j, .> with B the inverse Gram matrix."""
    if not isinstance(sub, ModeSubspace):
        sub = ModeSubspace(_as_columns(sub))
    sub._require(BOSONIC)
    dim = sub.basis.shape[0]
    if sub.is_empty:
        return SymplecticProjector(np.zeros((dim, dim), dtype=complex), sub)
    gram = gram_matrix(sub.basis)
    cond = np.linalg.cond(gram)
    if not cond < tolerances.get().max_condition:
        raise DegenerateSubspaceError(f"Gram matrix condition number {cond:.2e} too large")
    k = pairing_matrix(sub.ambient_modes)
    mat = sub.basis @ np.linalg.solve(gram, sub.basis.conj().T @ k)
    mat.setflags(write=False)
    return SymplecticProjector(mat, sub)


def projector_distance(a: ModeSubspace, b: ModeSubspace) -> float:
    """Frobenius distance between symplectic projectors: zero iff same span."""
    return float(np.linalg.norm(symplectic_projector(a).matrix - symplectic_projector(b).matrix))


def symplectic_gram_schmidt(vectors, tol: float | None = None) -> ModeSubspace:
    """Symplectic-orthonormal basis {g_I, g_I*} of span(vectors, conj(vectors)).

    Pivoted Gram-Schmidt in the pseudo inner product <.,.>: at each step the
    remaining candidates are reduced to an orthonormal (Euclidean) basis,
    the combination with the largest positive symplectic norm becomes the
    next g_I, and g_I, g_I* are projected out of every candidate.
    Dependent inputs are dropped at relative rank tolerance ``tol``.
    """
    tol = tolerances.get().rank if tol is None else tol
    cands = _as_columns(vectors)
    n = n_modes_of(cands)
    scale = np.linalg.norm(cands, axis=0).max() if cands.size else 0.0
    if scale == 0:
        return ModeSubspace.empty(n)
    cands = np.hstack([cands, cands.conj()]) / scale
    k = pairing_matrix(n)
    modes = []
    while True:
        u, s, _ = np.linalg.svd(cands, full_matrices=False)
        rank = int(np.sum(s > tol))
        if rank == 0:
            break
        q = u[:, :rank]
        gram = q.conj().T @ k @ q
        lam, vec = np.linalg.eigh(0.5 * (gram + gram.conj().T))
        if lam[-1] <= tol:
            raise DegenerateSubspaceError(
                f"vectors span a degenerate (non-symplectic) subspace; {rank} directions left isotropic"
            )
        g = fix_phase(q @ vec[:, -1] / np.sqrt(lam[-1]))
        modes.append(g)
        # w <- w - g<g, w> + g*<g*, w>
        cands = q - np.outer(g, g.conj() @ k @ q) + np.outer(g.conj(), g @ k @ q)
    return ModeSubspace(mode_pairs(np.column_stack(modes)))


def direct_sum(*subs: ModeSubspace) -> ModeSubspace:
    parts = [s.basis for s in subs if not s.is_empty]
    if not parts:
        return ModeSubspace.empty(subs[0].ambient_modes)
    return symplectic_gram_schmidt(np.hstack(parts))


def symplectic_complement(sub: ModeSubspace) -> ModeSubspace:
    perp = symplectic_projector(sub).complement
    n = sub.ambient_modes
    if sub.n_modes == n:
        return ModeSubspace.empty(n)
    return symplectic_gram_schmidt(perp.real)


def full_space(n_modes: int) -> ModeSubspace:
    """The whole phase space with the canonical annihilation basis."""
    return ModeSubspace(mode_pairs(annihilation_basis(n_modes)))


def _to_coordinates(sub: ModeSubspace) -> np.ndarray:
    """Matrix C with C v = Darboux coordinates of Pi_sub v."""
    form = symplectic_form(sub.n_modes)
    return form.matrix @ sub.darboux.T @ symplectic_form(sub.ambient_modes).lower


def restrict(J: ComplexStructure, sub: ModeSubspace) -> ComplexStructure:
    """Pi_A J Pi_A in the real Darboux coordinates of A's normalized basis.

    The result is the restricted complex structure of the reduced state on A,
    so its symplectic spectrum is directly comparable to full-space spectra.
    """
    sub._require(BOSONIC)
    if sub.ambient_modes != J.n_modes:
        raise DimensionMismatchError("subsystem and J live in different phase spaces")
    return ComplexStructure(_to_coordinates(sub) @ J.matrix @ sub.darboux)


def reduce_state(state: GaussianState, sub: ModeSubspace) -> GaussianState:
    """Reduced state on ``sub`` in its Darboux coordinates."""
    d = sub.darboux
    sigma = d.T @ state.covariance @ d
    return GaussianState(0.5 * (sigma + sigma.T), d.T @ state.mean)


def localize(sub: ModeSubspace, within: ModeSubspace) -> ModeSubspace:
    """Express ``sub`` (contained in ``within``) in the Darboux coordinates of ``within``."""
    coords = _to_coordinates(within) @ sub.basis
    lost = np.linalg.norm(within.darboux @ coords - sub.basis)
    if lost > 1e-8 * max(1.0, np.linalg.norm(sub.basis)):
        raise DimensionMismatchError(f"subspace is not contained in the enclosing subsystem ({lost:.2e})")
    return ModeSubspace(coords)


def is_uncorrelated(sub: ModeSubspace, J: ComplexStructure, tol: float | None = None) -> UncorrelatedTest:
    """A is uncorrelated iff [Pi_A, J] = 0 (J leaves Gamma_A invariant)."""
    tol = tolerances.get().commutator if tol is None else tol
    p = symplectic_projector(sub).matrix
    comm = p @ J.matrix - J.matrix @ p
    residual = float(np.linalg.norm(comm) / np.linalg.norm(J.matrix))
    return UncorrelatedTest(residual <= tol, residual)


def correlation_block(state: GaussianState, a: ModeSubspace, b: ModeSubspace) -> np.ndarray:
    """C_ij = sigma(xi_i*, eta_j*) between bases of two independent subsystems."""
    cross = symplectic_product(a.basis, b.basis)
    if cross.size and np.abs(cross).max() > 1e-9 * max(1.0, np.abs(a.basis).max() * np.abs(b.basis).max()):
        raise NonOrthogonalSubsystemsError("subsystems are not symplectically orthogonal")
    return a.basis.conj().T @ state.covariance @ b.basis.conj()


def random_subsystem(n_modes: int, n_sub: int, rng: np.random.Generator, squeezing: float = 0.5) -> ModeSubspace:
    """First ``n_sub`` canonical modes moved by a random symplectic map (moderately squeezed)."""
    s = random_symplectic(n_modes, rng, scale=squeezing)
    return ModeSubspace(mode_pairs(s @ annihilation_basis(n_modes)[:, :n_sub]))
