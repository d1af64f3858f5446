"""Partners in pure fermionic Gaussian states.

For fermions the roles of metric and two-form swap: the Clifford metric g is
the identity and the state defines an antisymmetric form omega.  The complex
structure is J = -omega g, projectors are g-orthogonal, and the partner of an
even-dimensional real subspace A is the orthogonal projection of J A onto the
complement of A.  Subspaces are real spans (no complexification).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import ortho_group

from . import tolerances
from .errors import DimensionMismatchError, WrongPurityError
from .phase_space import n_modes_of, symplectic_form
from .subsystems import FERMIONIC, ModeSubspace


@dataclass(frozen=True, eq=False)
class FermionicState:
    omega: np.ndarray

    def __post_init__(self):
        om = np.array(self.omega, dtype=float)
        if om.ndim != 2 or om.shape[0] != om.shape[1]:
            raise DimensionMismatchError(f"omega must be square, got {om.shape}")
        n_modes_of(om)
        if np.abs(om + om.T).max() > 1e-10 * max(1.0, np.abs(om).max()):
            raise ValueError("omega must be antisymmetric")
        om.setflags(write=False)
        object.__setattr__(self, "omega", om)

    @property
    def n_modes(self) -> int:
        return self.omega.shape[0] // 2

    @property
    def metric(self) -> np.ndarray:
        return np.eye(self.omega.shape[0])


@dataclass(frozen=True, eq=False)
class FermionicComplexStructure:
    matrix: np.ndarray

    @property
    def n_modes(self) -> int:
        return self.matrix.shape[0] // 2


def fermionic_complex_structure(state: FermionicState) -> FermionicComplexStructure:
    """J = -omega g, which must square to -1 (pure state)."""
    J = -state.omega @ state.metric
    if abs(np.linalg.det(state.omega)) < 1e-12:
        raise WrongPurityError("omega is degenerate; not a pure fermionic Gaussian state")
    err = np.abs(J @ J + np.eye(len(J))).max()
    if err > 1e-9:
        raise WrongPurityError(f"J^2 differs from -1 by {err:.2e}; not a pure state")
    J.setflags(write=False)
    return FermionicComplexStructure(J)


def fermionic_subspace(vectors) -> ModeSubspace:
    """Orthonormal (in g) real basis of the span of ``vectors``."""
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        return _orth_subspace(vectors.astype(float))
    return _orth_subspace(np.column_stack([np.asarray(v, dtype=float) for v in vectors]))


def _orth_subspace(columns: np.ndarray) -> ModeSubspace:
    n = n_modes_of(columns)
    u, s, _ = np.linalg.svd(columns, full_matrices=False)
    rank = int(np.sum(s > tolerances.get().rank * max(s[0], 1e-300))) if s.size and s[0] > 0 else 0
    if rank % 2:
        raise DimensionMismatchError(f"fermionic subsystems need an even real dimension, got {rank}")
    if rank == 0:
        return ModeSubspace.empty(n, FERMIONIC)
    return ModeSubspace(u[:, :rank], FERMIONIC)


def orthogonal_projector(sub: ModeSubspace) -> np.ndarray:
    sub._require(FERMIONIC)
    return sub.basis @ sub.basis.T


def fermionic_partner(sub: ModeSubspace, J: FermionicComplexStructure) -> ModeSubspace:
    """(1 - P_A) J A; empty when J leaves A invariant."""
    sub._require(FERMIONIC)
    p = orthogonal_projector(sub)
    if np.linalg.norm(p @ J.matrix - J.matrix @ p) <= tolerances.get().commutator * np.linalg.norm(J.matrix):
        return ModeSubspace.empty(sub.ambient_modes, FERMIONIC)
    return _orth_subspace((np.eye(len(p)) - p) @ J.matrix @ sub.basis)


def is_invariant(sub: ModeSubspace, J: FermionicComplexStructure, tol: float | None = None) -> bool:
    tol = tolerances.get().commutator if tol is None else tol
    p = orthogonal_projector(sub)
    return bool(np.linalg.norm(p @ J.matrix - J.matrix @ p) <= tol * np.linalg.norm(J.matrix))


def fermionic_vacuum(n_modes: int) -> FermionicState:
    return FermionicState(symplectic_form(n_modes).matrix)


def random_fermionic_state(n_modes: int, rng: np.random.Generator) -> FermionicState:
    """omega = R Omega_0 R^T with R Haar-random orthogonal."""
    r = ortho_group.rvs(2 * n_modes, random_state=rng)
    om = r @ symplectic_form(n_modes).matrix @ r.T
    return FermionicState(0.5 * (om - om.T))
