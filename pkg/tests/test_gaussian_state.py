import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from gaussian_partners import fixtures as fx
from gaussian_partners.errors import (
    DimensionMismatchError,
    NonOrthonormalBasisError,
    NumericalDegeneracyError,
    SingularCovarianceError,
)
from gaussian_partners.gaussian_state import (
    ComplexStructure,
    GaussianState,
    complex_structure,
    covariance_of,
    is_pure,
    purity,
    random_state,
    state_from_spectrum,
    structure_from_modes,
    symplectic_spectrum,
    thermal,
    two_mode_squeezed,
    vacuum,
    validate_state,
    wigner_density,
)
from gaussian_partners.phase_space import annihilation_basis, pairing_matrix, symplectic_form

from strategies import n_modes, rng_from, seeds


def test_vacuum_has_unit_spectrum():
    J = complex_structure(vacuum(2))
    np.testing.assert_allclose(J.matrix @ J.matrix, -np.eye(4), atol=1e-14)
    np.testing.assert_allclose(symplectic_spectrum(J).nu, [1, 1])


def test_thermal_spectrum_and_purity():
    J = complex_structure(thermal([2.0, 3.0]))
    np.testing.assert_allclose(symplectic_spectrum(J).nu, [2, 3], atol=1e-12)
    assert purity(J) == pytest.approx(1 / 6, abs=1e-12)
    assert purity(J) == pytest.approx(1 / np.sqrt(np.linalg.det(J.matrix)), abs=1e-12)
    assert not is_pure(J)


def test_eigenvectors_are_normalized_and_ordered(rng):
    J = complex_structure(random_state(3, rng))
    spec = symplectic_spectrum(J)
    assert np.all(np.diff(spec.nu) >= 0)
    k = pairing_matrix(3)
    np.testing.assert_allclose(spec.modes.conj().T @ k @ spec.modes, np.eye(3), atol=1e-10)
    np.testing.assert_allclose(spec.modes.T @ k @ spec.modes, 0, atol=1e-10)
    for nu, e in spec.pairs:
        np.testing.assert_allclose(J.matrix @ e, 1j * nu * e, atol=1e-9 * nu)


def test_degenerate_eigenvalues_are_grouped():
    spec = symplectic_spectrum(complex_structure(fx.j8()))
    groups = spec.groups()
    assert [g[0] for g in groups] == pytest.approx([2, 3, 4])
    assert [len(g[1]) for g in groups] == [2, 1, 1]


def test_two_mode_squeezed_is_pure():
    J = complex_structure(two_mode_squeezed(0.8))
    assert is_pure(J)
    np.testing.assert_allclose(J.matrix @ J.matrix, -np.eye(4), atol=1e-10)


def test_state_from_spectrum_uses_given_basis():
    state = state_from_spectrum([2.0, 3.0], seed=5)
    np.testing.assert_allclose(symplectic_spectrum(complex_structure(state)).nu, [2, 3], atol=1e-10)


def test_state_from_spectrum_rejects_bad_basis():
    with pytest.raises(NonOrthonormalBasisError):
        state_from_spectrum([1.0, 1.0], 2 * annihilation_basis(2))
    with pytest.raises(DimensionMismatchError):
        state_from_spectrum([1.0, 1.0], annihilation_basis(3))


def test_constructor_rejects_bad_shapes():
    with pytest.raises(DimensionMismatchError):
        GaussianState(np.eye(4), np.zeros(3))
    with pytest.raises(DimensionMismatchError):
        GaussianState(np.zeros((2, 3)))


def test_validate_flags_half_vacuum():
    report = validate_state(GaussianState(0.5 * np.eye(2)))
    assert not report.is_physical
    assert report.min_symplectic_eigenvalue == pytest.approx(0.5)
    assert np.isnan(report.purity)


def test_validate_flags_indefinite_covariance():
    report = validate_state(GaussianState(np.diag([2.0, -1.0])))
    assert not report.is_positive_definite and not report.is_physical


def test_spectrum_refuses_indefinite_sigma():
    J = ComplexStructure(-symplectic_form(1).matrix @ np.diag([2.0, -1.0]))
    with pytest.raises(NumericalDegeneracyError):
        symplectic_spectrum(J)


def test_wigner_density_normalized():
    state = GaussianState(np.array([[2.0, 0.5], [0.5, 1.0]]), [0.3, -0.2])
    total, _ = integrate.dblquad(lambda p, x: wigner_density(state, [x, p]), -12, 12, -12, 12)
    assert total == pytest.approx(1.0, abs=1e-7)


def test_wigner_density_needs_invertible_covariance():
    with pytest.raises(SingularCovarianceError):
        wigner_density(GaussianState(np.diag([1.0, 0.0])), [0.0, 0.0])


@given(seeds, n_modes)
def test_sigma_j_round_trip(seed, n):
    state = random_state(n, rng_from(seed))
    sigma = covariance_of(complex_structure(state))
    err = np.linalg.norm(sigma - state.covariance) / np.linalg.norm(state.covariance)
    assert err < 1e-12


@given(seeds, n_modes)
def test_spectrum_rebuilds_j(seed, n):
    J = complex_structure(random_state(n, rng_from(seed)))
    spec = symplectic_spectrum(J)
    rebuilt = structure_from_modes(spec.nu, spec.modes)
    assert np.linalg.norm(rebuilt.matrix - J.matrix) <= 1e-9 * np.linalg.norm(J.matrix)


@given(seeds, n_modes)
def test_j_is_antihermitian_in_covariance_product(seed, n):
    rng = rng_from(seed)
    state = random_state(n, rng)
    sigma, J = state.covariance, complex_structure(state).matrix
    g = rng.normal(size=2 * n) + 1j * rng.normal(size=2 * n)
    d = rng.normal(size=2 * n) + 1j * rng.normal(size=2 * n)
    value = g.conj() @ sigma @ J @ d + (J @ g).conj() @ sigma @ d
    assert abs(value) <= 1e-9 * np.linalg.norm(sigma) * np.linalg.norm(J) * np.linalg.norm(g) * np.linalg.norm(d)


@given(seeds, n_modes)
def test_omega_j_is_symmetric(seed, n):
    rng = rng_from(seed)
    J = complex_structure(random_state(n, rng)).matrix
    lower = symplectic_form(n).lower
    g, d = rng.normal(size=(2, 2 * n))
    assert g @ lower @ J @ d == pytest.approx(d @ lower @ J @ g, rel=1e-9, abs=1e-9)


@given(seeds, n_modes, st.booleans())
def test_purity_in_unit_interval_and_one_iff_j_squared_is_minus_one(seed, n, pure):
    J = complex_structure(random_state(n, rng_from(seed), pure=pure))
    p = purity(J)
    assert 0 < p <= 1 + 1e-9
    squares_to_minus_one = np.abs(J.matrix @ J.matrix + np.eye(2 * n)).max() <= 1e-8 * np.abs(J.matrix).max() ** 2
    assert is_pure(J) == squares_to_minus_one == pure


def test_two_hundred_random_states_are_physical():
    worst = np.inf
    for seed in range(200):
        rng = np.random.default_rng(seed)
        state = random_state(int(rng.integers(1, 6)), rng)
        worst = min(worst, symplectic_spectrum(complex_structure(state)).nu[0])
        assert validate_state(state).is_physical
    assert worst >= 1 - 1e-9
