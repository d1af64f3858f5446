"""Partner subsystems that carry all correlations of a chosen subsystem.

* Pure states: the partner is Pi_A^perp(J Gamma_A).
* Mixed states: the correlation partner is Pi_A^perp applied to the
  components of Gamma_A in every eigenspace of J.  Together with A it is
  the smallest J-invariant (hence uncorrelated) subsystem containing A.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import tolerances
from .errors import DimensionMismatchError, InternalConsistencyError, UnphysicalStateError, WrongPurityError
from .gaussian_state import ComplexStructure, is_pure, symplectic_spectrum
from .phase_space import pairing_matrix
from .subsystems import (
    BOSONIC,
    ModeSubspace,
    direct_sum,
    is_uncorrelated,
    restrict,
    symplectic_gram_schmidt,
    symplectic_projector,
)

PURE = "pure"
CORRELATION = "correlation"
ENTANGLEMENT = "entanglement"


@dataclass(frozen=True, eq=False)
class PartnerResult:
    """Partner of ``source``; ``diagnostics`` is the residual of the kind's self-check."""

    source: ModeSubspace
    partner: ModeSubspace
    kind: str
    mode_count: int
    diagnostics: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def is_empty(self) -> bool:
        return self.mode_count == 0


@dataclass(frozen=True, eq=False)
class EigenspaceProjectors:
    """groups[k] = (nu, Pi^+, Pi^-) for each distinct symplectic eigenvalue."""

    groups: list

    @property
    def plus(self) -> np.ndarray:
        return sum(p for _, p, _ in self.groups)

    @property
    def minus(self) -> np.ndarray:
        return sum(m for _, _, m in self.groups)


def _require_bosonic(sub: ModeSubspace, J: ComplexStructure):
    sub._require(BOSONIC)
    if sub.ambient_modes != J.n_modes:
        raise DimensionMismatchError(f"subsystem lives in {sub.ambient_modes} modes, J in {J.n_modes}")


def _empty(sub: ModeSubspace, kind: str, **details) -> PartnerResult:
    return PartnerResult(sub, ModeSubspace.empty(sub.ambient_modes), kind, 0, 0.0, details)


def _finish(sub: ModeSubspace, partner: ModeSubspace, kind: str, expected: int, J, **details):
    if partner.n_modes != expected:
        raise InternalConsistencyError(
            f"{kind} partner has {partner.n_modes} modes, the mode-count formula gives {expected}"
        )
    if partner.is_empty:
        return _empty(sub, kind, **details)
    residual = is_uncorrelated(direct_sum(sub, partner), J).residual
    return PartnerResult(sub, partner, kind, partner.n_modes, residual, details)


def pure_partner(sub: ModeSubspace, J: ComplexStructure) -> PartnerResult:
    """Partner of ``sub`` in a pure state: span of Pi_A^perp(J Gamma_A)."""
    _require_bosonic(sub, J)
    tol = tolerances.get()
    if not is_pure(J):
        raise WrongPurityError("pure_partner needs a pure state (J^2 = -1); use correlation_partner")
    nu_a = symplectic_spectrum(restrict(J, sub)).nu
    if is_uncorrelated(sub, J):
        return _empty(sub, PURE, restricted_nu=nu_a)
    expected = int(np.sum(nu_a > 1 + tol.correlated))
    perp = symplectic_projector(sub).complement
    partner = symplectic_gram_schmidt(perp @ J.matrix @ sub.basis)
    return _finish(sub, partner, PURE, expected, J, restricted_nu=nu_a)


def eigenspace_projectors(J: ComplexStructure) -> EigenspaceProjectors:
    spec = symplectic_spectrum(J)
    k = pairing_matrix(J.n_modes)
    groups = []
    for nu, idx in spec.groups():
        e = spec.modes[:, idx]
        plus = e @ e.conj().T @ k
        groups.append((nu, plus, plus.conj()))
    return EigenspaceProjectors(groups)


def _rank(vectors: np.ndarray, tol: float) -> int:
    if vectors.size == 0:
        return 0
    s = np.linalg.svd(vectors, compute_uv=False)
    return int(np.sum(s > tol * max(s[0], 1e-300))) if s[0] > 0 else 0


def _positive_part_dimension(projectors: EigenspaceProjectors, basis: np.ndarray, tol: float) -> int:
    """dim of (+)_I Pi_I^+ Gamma_A; the eigenspaces are independent so ranks add."""
    return sum(_rank(plus @ basis, tol) for _, plus, _ in projectors.groups)


def correlation_partner(sub: ModeSubspace, J: ComplexStructure) -> PartnerResult:
    """Smallest subsystem A_cp such that A (+) A_cp is uncorrelated."""
    _require_bosonic(sub, J)
    tol = tolerances.get()
    spec = symplectic_spectrum(J)
    if spec.nu[0] < 1 - tol.physical:
        raise UnphysicalStateError(f"state is unphysical (smallest symplectic eigenvalue {spec.nu[0]:.6g})")
    projectors = eigenspace_projectors(J)
    expected = _positive_part_dimension(projectors, sub.basis, tol.rank) - sub.n_modes
    if is_uncorrelated(sub, J):
        if expected:
            raise InternalConsistencyError(f"A is uncorrelated but the mode-count formula gives {expected}")
        return _empty(sub, CORRELATION, groups=len(projectors.groups))
    pieces = np.hstack([p @ sub.basis for _, plus, minus in projectors.groups for p in (plus, minus)])
    perp = symplectic_projector(sub).complement
    partner = symplectic_gram_schmidt(perp @ pieces)
    return _finish(sub, partner, CORRELATION, expected, J, groups=len(projectors.groups))
