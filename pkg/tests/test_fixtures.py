import pytest

from avkit.fixtures import MANIFEST, entry, manifest, replay, run_suite
from avkit.field import GF

DEFAULT = [e.key for e in manifest(deep=False)]
DEEP = [e.key for e in MANIFEST if e.tier == "deep"]


def test_manifest_shape():
    keys = [e.key for e in MANIFEST]
    assert len(keys) == len(set(keys))
    for e in MANIFEST:
        js = e.to_json()
        assert js["citation"] and js["checks"] and js["recipe"]["name"] == e.fixture


def test_manifest_expectations():
    assert entry("linked_8_7").checks[0][2]["positive"] == (1, 2, 1)
    assert entry("ci_444_points").checks[0][2]["positive"] == (1, 4, 7, 8, 5)
    assert entry("twisted_plus_6").checks[0][0] == "not_unexpected"


@pytest.mark.parametrize("key", DEFAULT)
def test_default_replay(key):
    r = replay(entry(key), GF)
    assert r.ok, r.to_json()


@pytest.mark.deep
@pytest.mark.parametrize("key", DEEP)
def test_deep_replay(key):
    r = replay(entry(key), GF)
    assert r.ok, r.to_json()


def test_concurrent_suite_is_deterministic():
    keys = ["X1", "twisted_cubic", "linked_7_4"]
    a = [r.to_json() for r in run_suite(keys, workers=3)]
    b = [r.to_json() for r in run_suite(keys, workers=1)]
    assert a == b
