"""Partial transposition, PPT diagnostics, negativity and entanglement partners.

The partial transpose with respect to A flips the momenta of A in a
Darboux basis adapted to A: for A's normalized modes g_I the flip sends
g_I <-> g_I* and leaves the symplectic complement untouched.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import tolerances
from .errors import InternalConsistencyError, UnphysicalStateError
from .gaussian_state import ComplexStructure, GaussianState, complex_structure, covariance_of, symplectic_spectrum
from .partners import ENTANGLEMENT, PartnerResult, _empty, _require_bosonic
from .phase_space import HBAR, pairing_matrix
from .subsystems import (
    ModeSubspace,
    direct_sum,
    localize,
    restrict,
    symplectic_gram_schmidt,
    symplectic_projector,
)


@dataclass(frozen=True, eq=False)
class PartialTranspose:
    """Momentum flip of ``flipped``; ``matrix`` is real and squares to one."""

    flipped: ModeSubspace
    matrix: np.ndarray


@dataclass(frozen=True, eq=False)
class PTSpectrum:
    """Symplectic spectrum of a partially transposed state (may dip below one)."""

    nu: np.ndarray
    modes: np.ndarray
    threshold: float

    @property
    def subunity(self) -> np.ndarray:
        """Indices of eigenvalues below ``1 - threshold``."""
        return np.flatnonzero(self.nu < 1 - self.threshold)

    @property
    def subunity_values(self) -> np.ndarray:
        return self.nu[self.subunity]

    @property
    def pairs(self):
        return [(float(v), self.modes[:, i]) for i, v in enumerate(self.nu)]


@dataclass(frozen=True)
class SubunityReport:
    count: int
    n_modes: int
    margin: int
    min_nu: float


def momentum_flip(sub: ModeSubspace) -> PartialTranspose:
    """T = Pi_A^perp + sum_I (g_I* <g_I, .> - g_I <g_I*, .>)."""
    k = pairing_matrix(sub.ambient_modes)
    g = sub.modes
    swap = g.conj() @ g.conj().T @ k - g @ g.T @ k
    t = symplectic_projector(sub).complement + swap
    t = t.real
    t.setflags(write=False)
    return PartialTranspose(sub, t)


def partial_transpose(J: ComplexStructure, sub: ModeSubspace) -> ComplexStructure:
    """J^{T_A} = -hbar Omega T sigma T."""
    _require_bosonic(sub, J)
    t = momentum_flip(sub).matrix
    sigma_t = t.T @ covariance_of(J) @ t
    return ComplexStructure(-HBAR * J.form.matrix @ (0.5 * (sigma_t + sigma_t.T)))


def pt_spectrum(JT: ComplexStructure, threshold: float | None = None) -> PTSpectrum:
    threshold = tolerances.get().subunity if threshold is None else threshold
    spec = symplectic_spectrum(JT)
    return PTSpectrum(spec.nu, spec.modes, threshold)


def _structure(state_or_J) -> ComplexStructure:
    if isinstance(state_or_J, GaussianState):
        return complex_structure(state_or_J)
    return state_or_J


def _check_physical(J: ComplexStructure):
    nu0 = symplectic_spectrum(J).nu[0]
    if nu0 < 1 - tolerances.get().physical:
        raise UnphysicalStateError(f"state is unphysical (smallest symplectic eigenvalue {nu0:.6g})")


def log_negativity(state_or_J, sub: ModeSubspace) -> float:
    """E_N = sum over subunity PT eigenvalues of -log2(nu)."""
    J = _structure(state_or_J)
    _check_physical(J)
    vals = pt_spectrum(partial_transpose(J, sub)).subunity_values
    return float(-np.sum(np.log2(vals)))


def is_non_ppt(state_or_J, sub: ModeSubspace) -> bool:
    J = _structure(state_or_J)
    return bool(pt_spectrum(partial_transpose(J, sub)).subunity.size)


def subunity_count_check(J: ComplexStructure, sub: ModeSubspace) -> SubunityReport:
    """At most N_A partially transposed eigenvalues can lie below one."""
    spec = pt_spectrum(partial_transpose(J, sub))
    count = int(spec.subunity.size)
    if count > sub.n_modes:
        raise InternalConsistencyError(
            f"{count} subunity eigenvalues for a {sub.n_modes}-mode subsystem; the bound is {sub.n_modes}"
        )
    return SubunityReport(count, sub.n_modes, sub.n_modes - count, float(spec.nu[0]))


def _spectrum_mismatch(a: np.ndarray, b: np.ndarray) -> float:
    a, b = np.sort(a), np.sort(b)
    size = max(len(a), len(b))
    a = np.pad(a, (0, size - len(a)), constant_values=1.0)
    b = np.pad(b, (0, size - len(b)), constant_values=1.0)
    return float(np.abs(a - b).max()) if size else 0.0


def restricted_subunity(J: ComplexStructure, sub: ModeSubspace, enclosing: ModeSubspace) -> np.ndarray:
    """Subunity PT eigenvalues of the reduced state on ``enclosing`` (which contains ``sub``)."""
    local = localize(sub, enclosing)
    return pt_spectrum(partial_transpose(restrict(J, enclosing), local)).subunity_values


def entanglement_partner(sub: ModeSubspace, J: ComplexStructure) -> PartnerResult:
    """Projection of the subunity eigenvectors of J^{T_A} onto A's complement."""
    _require_bosonic(sub, J)
    _check_physical(J)
    spec = pt_spectrum(partial_transpose(J, sub))
    idx = spec.subunity
    if idx.size > sub.n_modes:
        raise InternalConsistencyError(f"{idx.size} subunity eigenvalues exceed the {sub.n_modes}-mode bound")
    if idx.size == 0:
        return _empty(sub, ENTANGLEMENT, subunity=spec.subunity_values)
    perp = symplectic_projector(sub).complement
    partner = symplectic_gram_schmidt(perp @ spec.modes[:, idx])
    if partner.n_modes > sub.n_modes:
        raise InternalConsistencyError("entanglement partner is larger than the subsystem")
    restricted = restricted_subunity(J, sub, direct_sum(sub, partner))
    mismatch = _spectrum_mismatch(spec.subunity_values, restricted)
    return PartnerResult(sub, partner, ENTANGLEMENT, partner.n_modes, mismatch,
                         {"subunity": spec.subunity_values, "restricted_subunity": restricted})
