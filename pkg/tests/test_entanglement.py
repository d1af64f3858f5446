import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gaussian_partners import fixtures as fx
from gaussian_partners.entanglement import (
    entanglement_partner,
    is_non_ppt,
    log_negativity,
    momentum_flip,
    partial_transpose,
    pt_spectrum,
    restricted_subunity,
    subunity_count_check,
)
from gaussian_partners.errors import UnphysicalStateError
from gaussian_partners.gaussian_state import (
    GaussianState,
    complex_structure,
    random_state,
    two_mode_squeezed,
)
from gaussian_partners.oracle import dense_pt_eigensolve
from gaussian_partners.partners import pure_partner
from gaussian_partners.phase_space import symplectic_form, symplectic_product
from gaussian_partners.subsystems import (
    ModeSubspace,
    direct_sum,
    localize,
    projector_distance,
    random_subsystem,
    restrict,
    symplectic_complement,
)

from strategies import rng_from, seeds

# roots of v^2 - s v + det = 0 for the (nu_1, nu_3) = (2, 3) and (nu_2, nu_4) = (2, 4) pairs
J6_SUBUNITY = 0.5 * (35 - np.sqrt(1201))
J8_SUBUNITY = np.sort([J6_SUBUNITY, 21 - np.sqrt(433)])


def _first_mode(n):
    return ModeSubspace(np.eye(2 * n)[:, :2] @ np.array([[1, 1], [-1j, 1j]]) / np.sqrt(2))


def test_momentum_flip_is_an_antisymplectic_involution(rng):
    sub = random_subsystem(3, 1, rng)
    rest = symplectic_complement(sub).darboux
    t = momentum_flip(sub).matrix
    omega = symplectic_form(3).matrix
    np.testing.assert_allclose(t @ t, np.eye(6), atol=1e-9)
    # the form changes sign on A and nowhere else
    d = sub.darboux
    np.testing.assert_allclose(d.T @ t.T @ omega @ t @ d, -d.T @ omega @ d, atol=1e-9)
    np.testing.assert_allclose(t @ rest, rest, atol=1e-9)


def test_partial_transpose_is_an_involution(rng):
    J = complex_structure(random_state(4, rng))
    sub = random_subsystem(4, 2, rng)
    twice = partial_transpose(partial_transpose(J, sub), sub).matrix
    assert np.linalg.norm(twice - J.matrix) <= 1e-12 * np.linalg.norm(J.matrix)


def test_two_mode_squeezed_negativity():
    r = 0.7
    state = two_mode_squeezed(r)
    A = _first_mode(2)
    spec = pt_spectrum(partial_transpose(complex_structure(state), A))
    np.testing.assert_allclose(spec.subunity_values, [np.exp(-2 * r)], atol=1e-12)
    assert log_negativity(state, A) == pytest.approx(2 * r / np.log(2), abs=1e-12)


def test_negativity_grows_with_squeezing():
    A = _first_mode(2)
    values = [log_negativity(two_mode_squeezed(r, nu=1.5), A) for r in np.linspace(0.3, 1.5, 13)]
    first = [pt_spectrum(partial_transpose(complex_structure(two_mode_squeezed(r, nu=1.5)), A)).nu[0]
             for r in np.linspace(0.3, 1.5, 13)]
    assert np.all(np.diff(-np.log2(first)) > 0)
    assert np.all(np.diff(values) > 0)


def test_separable_thermal_state_is_ppt():
    state = two_mode_squeezed(0.1, nu=2.0)
    assert not is_non_ppt(state, _first_mode(2))
    assert log_negativity(state, _first_mode(2)) == 0.0


def test_single_mode_partner_in_j6():
    state = fx.j6()
    J = complex_structure(state)
    A = fx.subsystem(3, fx.SQUEEZED_13)
    spec = pt_spectrum(partial_transpose(J, A))
    np.testing.assert_allclose(spec.subunity_values, [J6_SUBUNITY], atol=1e-9)
    np.testing.assert_allclose(dense_pt_eigensolve(state, A).subunity_values, [J6_SUBUNITY], atol=1e-9)
    res = entanglement_partner(A, J)
    expected = fx.subsystem(3, {"e1*": fx.SQRT3, "e3": -2.0})
    assert projector_distance(res.partner, expected) < 1e-9
    assert projector_distance(entanglement_partner(res.partner, J).partner, A) < 1e-8


def test_two_mode_partner_in_j8():
    state = fx.j8()
    J = complex_structure(state)
    A = fx.subsystem(4, fx.SQUEEZED_13, fx.SQUEEZED_24)
    res = entanglement_partner(A, J)
    np.testing.assert_allclose(np.sort(res.details["subunity"]), J8_SUBUNITY, atol=1e-9)
    np.testing.assert_allclose(np.sort(dense_pt_eigensolve(state, A).subunity_values), J8_SUBUNITY, atol=1e-9)
    assert res.mode_count == 2
    assert res.diagnostics < 1e-9


def test_restricted_sign_flip_identity():
    """T_A T_B J^{T_B} T_A T_B = -J^{T_A} on the joint subsystem of A and its entanglement partner."""
    J = complex_structure(fx.j6())
    A = fx.subsystem(3, fx.SQUEEZED_13)
    B = entanglement_partner(A, J).partner
    AB = direct_sum(A, B)
    J_ab = restrict(J, AB)
    a, b = localize(A, AB), localize(B, AB)
    ta, tb = momentum_flip(a).matrix, momentum_flip(b).matrix
    lhs = ta @ tb @ partial_transpose(J_ab, b).matrix @ ta @ tb
    rhs = -partial_transpose(J_ab, a).matrix
    assert np.linalg.norm(lhs - rhs) <= 1e-12 * np.linalg.norm(rhs)


def test_unphysical_state_is_refused():
    with pytest.raises(UnphysicalStateError):
        log_negativity(GaussianState(0.5 * np.eye(4)), _first_mode(2))


@given(seeds, st.integers(2, 5))
def test_entanglement_partner_properties(seed, n):
    rng = rng_from(seed)
    J = complex_structure(random_state(n, rng))
    A = random_subsystem(n, 1, rng)
    res = entanglement_partner(A, J)
    if res.is_empty:
        return
    assert res.mode_count == 1
    assert np.abs(symplectic_product(A.basis, res.partner.basis)).max() < 1e-10
    joint = direct_sum(A, res.partner)
    np.testing.assert_allclose(restricted_subunity(J, A, joint), res.details["subunity"], atol=1e-8)
    assert log_negativity(restrict(J, joint), localize(A, joint)) == pytest.approx(log_negativity(J, A), abs=1e-8)
    assert projector_distance(entanglement_partner(res.partner, J).partner, A) < 1e-8


@given(seeds, st.integers(2, 5))
def test_pure_state_entanglement_partner_is_the_purifying_mode(seed, n):
    rng = rng_from(seed)
    J = complex_structure(random_state(n, rng, pure=True))
    A = random_subsystem(n, 1, rng)
    assert projector_distance(entanglement_partner(A, J).partner, pure_partner(A, J).partner) < 1e-8


def test_subunity_count_bounded_on_500_cases():
    for seed in range(500):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 6))
        n_sub = int(rng.integers(1, n))
        report = subunity_count_check(complex_structure(random_state(n, rng)), random_subsystem(n, n_sub, rng))
        assert report.count <= n_sub and report.margin >= 0


def test_negativity_localizes_on_100_random_states():
    for seed in range(100):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(3, 7))
        J = complex_structure(random_state(n, rng))
        A = random_subsystem(n, 1, rng)
        assert is_non_ppt(J, A), seed
        joint = direct_sum(A, entanglement_partner(A, J).partner)
        local = log_negativity(restrict(J, joint), localize(A, joint))
        assert local == pytest.approx(log_negativity(J, A), abs=1e-8), seed
