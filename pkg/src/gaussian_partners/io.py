"""JSON documents for states, subsystems and results.

State document (exactly one of ``covariance`` / ``spectral``)::

    {"n_modes": 2, "mean": [0, 0, 0, 0], "covariance": [[...], ...], "metadata": {}}
    {"n_modes": 3, "spectral": {"nu": [2, 2, 3], "basis": [[[re, im], ...], ...]}}

Subsystem document::

    {"coordinates": "canonical" | "eigenbasis", "vectors": [[[re, im], ...], ...]}

Complex numbers are ``[re, im]`` pairs.  In eigenbasis coordinates a vector
``c`` of length 2N means ``sum_I c[2I] e_I + c[2I+1] e_I*`` where e_I are the
state's symplectic eigenvectors (the document's spectral basis, the
annihilation basis if none is given, or the computed spectrum for a
covariance document).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import GaussianPartnersError
from .gaussian_state import GaussianState, complex_structure, state_from_spectrum, symplectic_spectrum
from .phase_space import annihilation_basis, mode_pairs
from .subsystems import ModeSubspace, gram_matrix, symplectic_gram_schmidt

CANONICAL = "canonical"
EIGENBASIS = "eigenbasis"


class DocumentError(GaussianPartnersError, ValueError):
    """Malformed document; ``locator`` names the offending field."""

    def __init__(self, locator: str, message: str):
        super().__init__(f"{locator}: {message}")
        self.locator = locator


def _real_array(value, locator: str, shape: tuple) -> np.ndarray:
    try:
        arr = np.array(value, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DocumentError(locator, f"expected an array of numbers ({exc})") from None
    if arr.shape != shape:
        raise DocumentError(locator, f"expected shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DocumentError(locator, "entries must be finite")
    return arr


def _complex_array(value, locator: str, shape: tuple) -> np.ndarray:
    pairs = _real_array(value, locator, shape + (2,))
    return pairs[..., 0] + 1j * pairs[..., 1]


def complex_to_pairs(arr) -> list:
    arr = np.asarray(arr, dtype=complex)
    return np.stack([arr.real, arr.imag], axis=-1).tolist()


def _require(doc: dict, key: str, locator: str):
    if not isinstance(doc, dict):
        raise DocumentError(locator, "expected an object")
    if key not in doc:
        raise DocumentError(f"{locator}.{key}", "missing field")
    return doc[key]


@dataclass(frozen=True, eq=False)
class StateDocument:
    n_modes: int
    mean: np.ndarray
    covariance: np.ndarray | None = None
    nu: np.ndarray | None = None
    basis: np.ndarray | None = None  # columns e_I
    metadata: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, doc: dict, locator: str = "state") -> "StateDocument":
        n = _require(doc, "n_modes", locator)
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise DocumentError(f"{locator}.n_modes", f"expected a positive integer, got {n!r}")
        mean = _real_array(doc.get("mean", [0.0] * (2 * n)), f"{locator}.mean", (2 * n,))
        metadata = doc.get("metadata", {})
        if not isinstance(metadata, dict) or not all(isinstance(v, str) for v in metadata.values()):
            raise DocumentError(f"{locator}.metadata", "expected a map of strings")
        has_cov, has_spec = "covariance" in doc, "spectral" in doc
        if has_cov == has_spec:
            raise DocumentError(locator, "exactly one of 'covariance' or 'spectral' is required")
        if has_cov:
            cov = _real_array(doc["covariance"], f"{locator}.covariance", (2 * n, 2 * n))
            return cls(n, mean, covariance=cov, metadata=dict(metadata))
        spec = doc["spectral"]
        nu = _real_array(_require(spec, "nu", f"{locator}.spectral"), f"{locator}.spectral.nu", (n,))
        basis = None
        if spec.get("basis") is not None:
            basis = _complex_array(spec["basis"], f"{locator}.spectral.basis", (n, 2 * n)).T
        return cls(n, mean, nu=nu, basis=basis, metadata=dict(metadata))

    def to_dict(self) -> dict:
        out: dict = {"n_modes": self.n_modes, "mean": self.mean.tolist()}
        if self.covariance is not None:
            out["covariance"] = self.covariance.tolist()
        else:
            spectral: dict = {"nu": self.nu.tolist()}
            if self.basis is not None:
                spectral["basis"] = complex_to_pairs(self.basis.T)
            out["spectral"] = spectral
        if self.metadata:
            out["metadata"] = dict(self.metadata)
        return out

    @classmethod
    def from_state(cls, state: GaussianState, metadata: dict | None = None) -> "StateDocument":
        return cls(state.n_modes, np.array(state.mean), covariance=np.array(state.covariance),
                   metadata=dict(metadata or {}))

    def to_state(self) -> GaussianState:
        if self.covariance is not None:
            return GaussianState(self.covariance, self.mean)
        try:
            base = state_from_spectrum(self.nu, self.basis)
        except GaussianPartnersError as exc:
            raise DocumentError("state.spectral.basis", str(exc)) from None
        return GaussianState(base.covariance, self.mean)

    def eigenbasis(self) -> np.ndarray:
        """Columns e_I used for eigenbasis coordinates."""
        if self.covariance is None:
            return annihilation_basis(self.n_modes) if self.basis is None else self.basis
        return symplectic_spectrum(complex_structure(self.to_state())).modes


@dataclass(frozen=True, eq=False)
class SubspaceDocument:
    coordinates: str
    vectors: np.ndarray  # columns
    metadata: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, doc: dict, n_modes: int, locator: str = "subsystem") -> "SubspaceDocument":
        coords = doc.get("coordinates", CANONICAL) if isinstance(doc, dict) else None
        if coords not in (CANONICAL, EIGENBASIS):
            raise DocumentError(f"{locator}.coordinates", f"expected 'canonical' or 'eigenbasis', got {coords!r}")
        raw = _require(doc, "vectors", locator)
        if not isinstance(raw, list) or not raw:
            raise DocumentError(f"{locator}.vectors", "expected a non-empty list of vectors")
        vectors = _complex_array(raw, f"{locator}.vectors", (len(raw), 2 * n_modes)).T
        return cls(coords, vectors, dict(doc.get("metadata", {})))

    def to_dict(self) -> dict:
        out = {"coordinates": self.coordinates, "vectors": complex_to_pairs(self.vectors.T)}
        if self.metadata:
            out["metadata"] = dict(self.metadata)
        return out

    @classmethod
    def from_subspace(cls, sub: ModeSubspace) -> "SubspaceDocument":
        return cls(CANONICAL, np.array(sub.basis))

    def to_subspace(self, eigenbasis: np.ndarray | None = None) -> ModeSubspace:
        vectors = self.vectors
        if self.coordinates == EIGENBASIS:
            if eigenbasis is None:
                raise DocumentError("subsystem.coordinates", "eigenbasis coordinates need a state")
            vectors = mode_pairs(eigenbasis) @ vectors
        elif _is_normalized(vectors):
            return ModeSubspace(vectors)
        try:
            return symplectic_gram_schmidt(vectors)
        except GaussianPartnersError as exc:
            raise DocumentError("subsystem.vectors", str(exc)) from None


def _is_normalized(vectors: np.ndarray) -> bool:
    """Columns already in the stored form [g_1, g_1*, g_2, g_2*, ...] with orthonormal g_I."""
    if vectors.shape[1] % 2 or np.any(vectors[:, 1::2] != vectors[:, 0::2].conj()):
        return False
    expected = np.diag(np.tile([1.0, -1.0], vectors.shape[1] // 2))
    return bool(np.abs(gram_matrix(vectors) - expected).max() <= 1e-12)


def round_significant(value, digits: int = 12):
    """Recursively round floats to ``digits`` significant digits for printing."""
    if isinstance(value, float):
        if value == 0 or not math.isfinite(value):
            return value
        return float(f"{value:.{digits}g}")
    if isinstance(value, dict):
        return {k: round_significant(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_significant(v, digits) for v in value]
    return value


def dumps(doc, digits: int | None = 12) -> str:
    if digits is not None:
        doc = round_significant(doc, digits)
    return json.dumps(doc, indent=2)


def read_json(path: str | Path, locator: str | None = None) -> dict:
    locator = locator or str(path)
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(locator, f"cannot read file ({exc.strerror})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{locator}:{exc.lineno}:{exc.colno}", exc.msg) from None
