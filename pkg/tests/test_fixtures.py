import json

import pytest

from derived_values import FIXTURES, compute, matches

KEYS = sorted(json.loads((FIXTURES / "derived.json").read_text()))


@pytest.fixture(scope="module")
def computed():
    return compute()


def test_every_fixture_key_is_covered(derived, computed):
    assert set(derived) == set(computed)


@pytest.mark.parametrize("key", KEYS)
def test_fixture_reproduced(key, derived, computed):
    F, got = computed[key]
    assert matches(F, derived[key], got), (key, derived[key], got)
