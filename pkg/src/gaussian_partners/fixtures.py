"""Reference states and subsystems written in a state's eigenbasis.

Subsystems are given as combinations of eigenvectors, e.g.
``eigen_combination(3, {"e1": 2, "e3*": -SQRT3})`` for 2 e_1 - sqrt(3) e_3*.
All reference states use the canonical annihilation basis as eigenbasis.
"""

from __future__ import annotations

import re
from collections.abc import Mapping

import numpy as np

from .gaussian_state import GaussianState, state_from_spectrum
from .phase_space import annihilation_basis
from .subsystems import ModeSubspace, symplectic_gram_schmidt

SQRT2 = np.sqrt(2.0)
SQRT3 = np.sqrt(3.0)
SQRT5 = np.sqrt(5.0)

_LABEL = re.compile(r"^e(\d+)(\*?)$")

# symplectic eigenvalues of the reference states
PURE3_NU = (1.0, 1.0, 1.0)
PURE4_NU = (1.0, 1.0, 1.0, 1.0)
J6_NU = (2.0, 2.0, 3.0)
J8_NU = (2.0, 2.0, 3.0, 4.0)


def eigen_combination(n_modes: int, coefficients: Mapping[str, complex], modes: np.ndarray | None = None) -> np.ndarray:
    """sum_k c_k e_k with labels 'e1', 'e1*', ... (1-based)."""
    modes = annihilation_basis(n_modes) if modes is None else np.asarray(modes)
    v = np.zeros(2 * n_modes, dtype=complex)
    for label, c in coefficients.items():
        m = _LABEL.match(label.replace(" ", ""))
        if not m or not 1 <= int(m.group(1)) <= n_modes:
            raise ValueError(f"bad eigenvector label {label!r} for {n_modes} modes")
        e = modes[:, int(m.group(1)) - 1]
        v += c * (e.conj() if m.group(2) else e)
    return v


def subsystem(n_modes: int, *combinations: Mapping[str, complex]) -> ModeSubspace:
    return symplectic_gram_schmidt([eigen_combination(n_modes, c) for c in combinations])


def pure3() -> GaussianState:
    return state_from_spectrum(PURE3_NU)


def pure4() -> GaussianState:
    return state_from_spectrum(PURE4_NU)


def j6() -> GaussianState:
    """Mixed three-mode state with J = diag(2i, -2i, 2i, -2i, 3i, -3i) in its eigenbasis."""
    return state_from_spectrum(J6_NU)


def j8() -> GaussianState:
    """Mixed four-mode state with symplectic eigenvalues (2, 2, 3, 4)."""
    return state_from_spectrum(J8_NU)


# 2 e1 - sqrt3 e3*: a single mode of unit norm mixing modes 1 and 3
SQUEEZED_13 = {"e1": 2.0, "e3*": -SQRT3}
SQUEEZED_24 = {"e2": 2.0, "e4*": -SQRT3}
# the second vector of the (7, 1) example, (1/sqrt5)(-2 sqrt3 e1* + e2 + 4 e3)
MIXED_123 = {"e1*": -2 * SQRT3 / SQRT5, "e2": 1 / SQRT5, "e3": 4 / SQRT5}

CATALOG_CASES = {
    1: ({"e1": 1.0, "e2": 1.0},),
    2: ({"e1": 1.0, "e3": 1.0},),
    3: ({"e1": 1.0, "e1*": 1.0, "e2": 1.0},),
    4: ({"e1": 1 / SQRT2, "e1*": 1 / SQRT2, "e2": 1 / SQRT2, "e3": 1 / SQRT2},),
}
