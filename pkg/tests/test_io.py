import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gaussian_partners import fixtures as fx
from gaussian_partners.gaussian_state import random_state
from gaussian_partners.io import (
    DocumentError,
    StateDocument,
    SubspaceDocument,
    complex_to_pairs,
    dumps,
    read_json,
    round_significant,
)
from gaussian_partners.subsystems import projector_distance, random_subsystem, symplectic_gram_schmidt

from strategies import rng_from, seeds


@given(seeds, st.integers(1, 4))
def test_state_round_trip_is_lossless(seed, n):
    rng = rng_from(seed)
    state = random_state(n, rng)
    doc = StateDocument.from_state(state, {"origin": "random"}).to_dict()
    doc["mean"] = rng.normal(size=2 * n).tolist()
    text = dumps(doc, digits=None)
    again = StateDocument.from_dict(json.loads(text))
    rebuilt = StateDocument.from_state(again.to_state(), again.metadata).to_dict()
    assert rebuilt == doc
    np.testing.assert_allclose(rebuilt["covariance"], state.covariance, rtol=0, atol=1e-15)


@given(seeds, st.integers(1, 4))
def test_subspace_round_trip_is_lossless(seed, n):
    # stored subsystems are already normalized, so re-normalizing on load must not move them
    sub = symplectic_gram_schmidt(random_subsystem(n, 1, rng_from(seed)).basis)
    doc = SubspaceDocument.from_subspace(sub).to_dict()
    again = SubspaceDocument.from_dict(json.loads(dumps(doc, digits=None)), n)
    assert again.to_dict() == doc
    np.testing.assert_array_equal(again.to_subspace().basis, sub.basis)


def test_spectral_document_round_trip():
    basis = complex_to_pairs(np.array([[1, -1j, 0, 0], [0, 0, 1, -1j]]) / np.sqrt(2))
    doc = {"n_modes": 2, "mean": [0.0, 0.0, 0.0, 0.0], "spectral": {"nu": [2.0, 3.0], "basis": basis}}
    parsed = StateDocument.from_dict(doc)
    assert parsed.to_dict() == doc
    np.testing.assert_allclose(parsed.to_state().covariance, np.diag([2.0, 2.0, 3.0, 3.0]), atol=1e-14)


def test_eigenbasis_coordinates_reproduce_fixture_subsystem():
    state = StateDocument.from_dict({"n_modes": 3, "spectral": {"nu": [1, 1, 1]}})
    coords = np.zeros(6, dtype=complex)
    coords[0], coords[5] = 2.0, -fx.SQRT3  # 2 e1 - sqrt3 e3*
    sub_doc = SubspaceDocument.from_dict({"coordinates": "eigenbasis", "vectors": complex_to_pairs([coords])}, 3)
    assert projector_distance(sub_doc.to_subspace(state.eigenbasis()), fx.subsystem(3, fx.SQUEEZED_13)) < 1e-14


@pytest.mark.parametrize("doc, locator", [
    ({}, "state.n_modes"),
    ({"n_modes": 0, "covariance": []}, "state.n_modes"),
    ({"n_modes": 1}, "state"),
    ({"n_modes": 1, "covariance": np.eye(2).tolist(), "spectral": {"nu": [1]}}, "state"),
    ({"n_modes": 2, "covariance": np.eye(2).tolist()}, "state.covariance"),
    ({"n_modes": 1, "covariance": [[1, "x"], [0, 1]]}, "state.covariance"),
    ({"n_modes": 1, "covariance": np.eye(2).tolist(), "mean": [0]}, "state.mean"),
    ({"n_modes": 1, "covariance": np.eye(2).tolist(), "metadata": {"a": 1}}, "state.metadata"),
    ({"n_modes": 1, "spectral": {}}, "state.spectral.nu"),
    ({"n_modes": 1, "spectral": {"nu": [1], "basis": [[[1, 0], [1, 0]]]}}, "state.spectral.basis"),
])
def test_malformed_state_documents_name_the_field(doc, locator):
    with pytest.raises(DocumentError) as info:
        StateDocument.from_dict(doc).to_state()
    assert info.value.locator == locator


@pytest.mark.parametrize("doc, locator", [
    ({"coordinates": "polar", "vectors": [[[1, 0]] * 2]}, "subsystem.coordinates"),
    ({"vectors": []}, "subsystem.vectors"),
    ({"vectors": [[[1, 0]] * 3]}, "subsystem.vectors"),
    ({"vectors": [[[1, 0], [0, 0]]]}, "subsystem.vectors"),
])
def test_malformed_subspace_documents_name_the_field(doc, locator):
    with pytest.raises(DocumentError) as info:
        SubspaceDocument.from_dict(doc, 1).to_subspace()
    assert info.value.locator == locator


def test_eigenbasis_coordinates_need_a_state():
    doc = SubspaceDocument.from_dict({"coordinates": "eigenbasis", "vectors": [[[1, 0], [0, 0]]]}, 1)
    with pytest.raises(DocumentError):
        doc.to_subspace()


def test_read_json_reports_line_and_column(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{\n  "n_modes": 1,\n  "covariance": [1, 2,]\n}\n')
    with pytest.raises(DocumentError) as info:
        read_json(path)
    assert info.value.locator.endswith(":3:23")
    with pytest.raises(DocumentError):
        read_json(tmp_path / "missing.json")


def test_printing_rounds_to_twelve_digits():
    assert round_significant([1 / 3, {"a": 2 / 3}, "text", 0.0]) == [0.333333333333, {"a": 0.666666666667}, "text", 0.0]
    assert json.loads(dumps({"x": np.pi})) == {"x": 3.14159265359}
