import threading

import pytest

from gaussian_partners import tolerances


def test_defaults():
    tol = tolerances.get()
    assert tol.subunity == 1e-9 and tol.correlated == 1e-7 and tol.max_condition == 1e12


def test_parse_overrides():
    assert tolerances.parse_overrides("subunity=1e-6, rank=1e-8") == {"subunity": 1e-6, "rank": 1e-8}
    assert tolerances.parse_overrides("") == {}


@pytest.mark.parametrize("text", ["bogus=1", "subunity", "subunity=abc", "subunity=-1", "rank=nan"])
def test_bad_overrides(text):
    with pytest.raises(ValueError):
        tolerances.parse_overrides(text)


def test_environment_variable():
    assert tolerances.from_environment({}) == {}
    assert tolerances.from_environment({tolerances.ENV_VAR: "purity=1e-6"}) == {"purity": 1e-6}


def test_using_is_scoped():
    with tolerances.using(subunity=0.5) as tol:
        assert tol.subunity == 0.5 and tolerances.get().subunity == 0.5
        with tolerances.using(rank=1e-3):
            assert tolerances.get().subunity == 0.5 and tolerances.get().rank == 1e-3
    assert tolerances.get().subunity == 1e-9


def test_overrides_do_not_leak_across_threads():
    seen = []
    with tolerances.using(subunity=0.5):
        worker = threading.Thread(target=lambda: seen.append(tolerances.get().subunity))
        worker.start()
        worker.join()
    assert seen == [1e-9]
