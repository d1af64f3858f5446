"""Hypothesis strategies and random builders shared by the property tests."""

import numpy as np
from hypothesis import strategies as st

from gaussian_partners.gaussian_state import GaussianState, random_state
from gaussian_partners.phase_space import annihilation_basis, mode_pairs, random_symplectic
from gaussian_partners.subsystems import ModeSubspace

seeds = st.integers(min_value=0, max_value=2**32 - 1)
n_modes = st.integers(min_value=1, max_value=4)
small_complex = st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False)


def rng_from(seed):
    return np.random.default_rng(seed)


def product_state(rng, n, n_sub):
    """Product state across (first n_sub modes, rest), then moved by a random global symplectic map."""
    sigma = np.zeros((2 * n, 2 * n))
    sigma[: 2 * n_sub, : 2 * n_sub] = random_state(n_sub, rng).covariance
    sigma[2 * n_sub:, 2 * n_sub:] = random_state(n - n_sub, rng).covariance
    s = random_symplectic(n, rng)
    s_inv = np.linalg.inv(s)
    moved = s_inv.T @ sigma @ s_inv
    sub = ModeSubspace(mode_pairs(s @ annihilation_basis(n)[:, :n_sub]))
    return GaussianState(0.5 * (moved + moved.T)), sub
