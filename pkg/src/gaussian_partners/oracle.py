"""Brute-force verifiers that share no solver or projector code with the main path.

Everything here works with real spans and Euclidean-orthonormal bases:
subspaces are compared through orthogonal projectors, Darboux bases come from
a real Schur decomposition of the restricted two-form, complements from
``scipy.linalg.null_space``, and eigenvalues from the general (non-Hermitian)
``scipy.linalg.eig``.  The main modules use none of these routes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .entanglement import PTSpectrum
from .gaussian_state import GaussianState
from .subsystems import ModeSubspace

SPAN_RCOND = 1e-9


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    residual: float
    tolerance: float


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {"passed": self.passed,
                "checks": [{"name": c.name, "passed": c.passed, "residual": c.residual,
                            "tolerance": c.tolerance} for c in self.checks]}


def _check(name: str, residual: float, tolerance: float) -> Check:
    residual = float(abs(residual))
    return Check(name, residual <= tolerance, residual, tolerance)


def _two_form(n: int) -> np.ndarray:
    """W with W(u, v) = u^T W v = sum_I p_I v_x,I - x_I v_p,I."""
    w = np.zeros((2 * n, 2 * n))
    for i in range(n):
        w[2 * i, 2 * i + 1] = -1.0
        w[2 * i + 1, 2 * i] = 1.0
    return w


def _real_span(basis: np.ndarray) -> np.ndarray:
    basis = np.asarray(basis)
    if basis.shape[1] == 0:
        return np.zeros((basis.shape[0], 0))
    return sla.orth(np.hstack([basis.real, basis.imag]), rcond=SPAN_RCOND)


def _orth_projector(q: np.ndarray) -> np.ndarray:
    return q @ q.T


def _complement(q: np.ndarray, w: np.ndarray) -> np.ndarray:
    if q.shape[1] == 0:
        return np.eye(w.shape[0])
    if q.shape[1] == w.shape[0]:
        return np.zeros((w.shape[0], 0))
    return sla.null_space(q.T @ w, rcond=SPAN_RCOND)


def _darboux(q: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Columns (x_1, p_1, ...) spanning ran(q) with W(x_I, p_J) = -delta_IJ."""
    k = q.T @ w @ q
    t, z = sla.schur(k, output="real")
    cols = []
    i = 0
    while i < len(t):
        if i + 1 >= len(t) or abs(t[i + 1, i]) < 1e-12:
            raise ValueError("subspace is not symplectic")
        a = t[i, i + 1]
        x, p = q @ z[:, i], q @ z[:, i + 1]
        if a > 0:
            x, p = p, x
        cols += [x / np.sqrt(abs(a)), p / np.sqrt(abs(a))]
        i += 2
    return np.column_stack(cols) if cols else np.zeros((q.shape[0], 0))


def dense_symplectic_eigenvalues(sigma: np.ndarray) -> np.ndarray:
    """Positive eigenvalues of i Omega sigma, ascending."""
    n = len(sigma) // 2
    w = sla.eigvals(-1j * _two_form(n) @ sigma)
    return np.sort(w.real[w.real > 0])


def _dense_pt(sigma: np.ndarray, q_a: np.ndarray, threshold: float) -> PTSpectrum:
    n = len(sigma) // 2
    w = _two_form(n)
    d = np.hstack([_darboux(q_a, w), _darboux(_complement(q_a, w), w)])
    flip = np.ones(2 * n)
    flip[1:q_a.shape[1]:2] = -1.0
    t = d @ np.diag(flip) @ np.linalg.inv(d)
    sigma_t = t.T @ sigma @ t
    # i Omega sigma^T e = nu e  <=>  J^T e = i nu e; Omega = -W here
    vals, vecs = sla.eig(-1j * w @ sigma_t)
    keep = np.flatnonzero(vals.real > 0)
    keep = keep[np.argsort(vals.real[keep])]
    nu = vals.real[keep]
    modes = vecs[:, keep]
    norms = np.real(-1j * np.einsum("ij,jk,ki->i", modes.conj().T, w, modes))
    modes = modes / np.sqrt(np.abs(norms))
    return PTSpectrum(nu, modes, threshold)


def dense_pt_eigensolve(state: GaussianState, sub: ModeSubspace, threshold: float = 1e-9) -> PTSpectrum:
    """Partially transposed spectrum from an explicit momentum flip in a Schur-built Darboux basis."""
    return _dense_pt(state.covariance, _real_span(sub.basis), threshold)


def _offdiagonal(sigma: np.ndarray, q: np.ndarray, w: np.ndarray) -> float:
    rest = _complement(q, w)
    if q.shape[1] == 0 or rest.shape[1] == 0:
        return 0.0
    return float(np.linalg.norm(q.T @ sigma @ rest) / np.linalg.norm(sigma))


def verify_uncorrelated_blockform(state: GaussianState, sub: ModeSubspace, tol: float = 1e-9) -> VerificationReport:
    """sigma is block diagonal across A and its symplectic complement."""
    w = _two_form(state.n_modes)
    q = _real_span(sub.basis)
    return VerificationReport((_check("offdiagonal_block", _offdiagonal(state.covariance, q, w), tol),))


def krylov_span(state: GaussianState, sub: ModeSubspace) -> np.ndarray:
    """Smallest J-invariant real subspace containing A: span{J^k a}."""
    j = _two_form(state.n_modes) @ state.covariance
    q = _real_span(sub.basis)
    while True:
        grown = sla.orth(np.hstack([q, j @ q]), rcond=SPAN_RCOND)
        if grown.shape[1] == q.shape[1]:
            return q
        q = grown


def _restricted(sigma: np.ndarray, q_ab: np.ndarray, q_a: np.ndarray, w: np.ndarray):
    d = _darboux(q_ab, w)
    local = np.linalg.lstsq(d, q_a, rcond=None)[0]
    return d.T @ sigma @ d, sla.orth(local, rcond=SPAN_RCOND)


def _subunity_mismatch(a: np.ndarray, b: np.ndarray) -> float:
    size = max(len(a), len(b))
    if size == 0:
        return 0.0
    a = np.pad(np.sort(a), (0, size - len(a)), constant_values=1.0)
    b = np.pad(np.sort(b), (0, size - len(b)), constant_values=1.0)
    return float(np.abs(a - b).max())


def _oracle_entanglement_span(sigma: np.ndarray, q_a: np.ndarray, w: np.ndarray, threshold: float) -> np.ndarray:
    spec = _dense_pt(sigma, q_a, threshold)
    e = spec.modes[:, spec.subunity]
    if e.shape[1] == 0:
        return np.zeros((len(sigma), 0))
    d_a, d_b = _darboux(q_a, w), _darboux(_complement(q_a, w), w)
    coords = np.linalg.solve(np.hstack([d_a, d_b]), e)
    projected = d_b @ coords[d_a.shape[1]:]
    return _real_span(projected)


def verify_partner(state: GaussianState, sub: ModeSubspace, partner: ModeSubspace, kind: str,
                   tol: float = 1e-8, threshold: float = 1e-9) -> VerificationReport:
    """Check that ``partner`` is the ``kind`` partner of ``sub`` ('pure', 'correlation', 'entanglement')."""
    sigma = state.covariance
    w = _two_form(state.n_modes)
    q_a = _real_span(sub.basis)
    q_p = _real_span(partner.basis)
    checks = [_check("symplectic_orthogonality", np.abs(q_a.T @ w @ q_p).max() if q_p.size else 0.0, tol)]
    q_ap = sla.orth(np.hstack([q_a, q_p]), rcond=SPAN_RCOND)

    if kind in ("pure", "correlation"):
        checks.append(_check("offdiagonal_block", _offdiagonal(sigma, q_ap, w), tol))
    if kind == "pure":
        try:
            sigma_ap, _ = _restricted(sigma, q_ap, q_a, w)
            residual = 1.0 / np.sqrt(np.linalg.det(sigma_ap)) - 1.0
        except ValueError:
            residual = np.inf
        checks.append(_check("restricted_purity", residual, tol))
    elif kind == "correlation":
        k = krylov_span(state, sub)
        checks.append(_check("mode_count", (k.shape[1] - q_a.shape[1]) - q_p.shape[1], 0.0))
        dist = np.linalg.norm(_orth_projector(k) - _orth_projector(q_ap)) if k.shape == q_ap.shape else np.inf
        checks.append(_check("minimal_invariant_span", dist, tol))
    elif kind == "entanglement":
        full = _dense_pt(sigma, q_a, threshold).subunity_values
        if q_p.shape[1] == 0:
            checks.append(_check("subunity_localization", _subunity_mismatch(full, np.array([])), tol))
        else:
            try:
                sigma_ap, local_a = _restricted(sigma, q_ap, q_a, w)
                restricted = _dense_pt(sigma_ap, local_a, threshold).subunity_values
                mismatch = _subunity_mismatch(full, restricted)
            except ValueError:
                mismatch = np.inf
            checks.append(_check("subunity_localization", mismatch, tol))
            try:
                back = _oracle_entanglement_span(sigma, q_p, w, threshold)
                if back.shape[1] == q_a.shape[1]:
                    reciprocity = np.linalg.norm(_orth_projector(back) - _orth_projector(q_a))
                else:
                    reciprocity = np.linalg.norm(back - _orth_projector(q_a) @ back) if back.size else np.inf
            except (ValueError, np.linalg.LinAlgError):
                reciprocity = np.inf
            checks.append(_check("reciprocity", reciprocity, tol))
    else:
        raise ValueError(f"unknown partner kind {kind!r}")
    return VerificationReport(tuple(checks))
