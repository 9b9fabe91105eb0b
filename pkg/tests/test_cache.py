import json

import pytest

from nilrat import cache, cli, shoji
from nilrat.orbits import Algebra
from nilrat.shoji import ktilde_matrix


@pytest.fixture
def fresh_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("NILRAT_CACHE", str(tmp_path / "c"))
    shoji._ktilde_matrix.cache_clear()
    yield tmp_path / "c"
    shoji._ktilde_matrix.cache_clear()


def _canonical(kt):
    return cache.canonical_json(kt.to_json())


def test_cache_hit_is_byte_identical(fresh_cache):
    a = Algebra("C", 3)
    first = _canonical(ktilde_matrix(a))
    files = list(fresh_cache.iterdir())
    assert len(files) == 1
    shoji._ktilde_matrix.cache_clear()
    assert _canonical(ktilde_matrix(a)) == first
    cache.set_enabled(False)
    try:
        shoji._ktilde_matrix.cache_clear()
        assert _canonical(ktilde_matrix(a)) == first
    finally:
        cache.set_enabled(True)


@pytest.mark.parametrize("damage", ["truncate", "tamper", "garbage"])
def test_corrupted_cache_is_bypassed(fresh_cache, damage, caplog):
    a = Algebra("B", 3)
    good = _canonical(ktilde_matrix(a))
    path = next(fresh_cache.iterdir())
    text = path.read_text()
    if damage == "truncate":
        path.write_text(text[: len(text) // 2])
    elif damage == "garbage":
        path.write_bytes(b"\x00\xff not json")
    else:
        data = json.loads(text)
        data["payload"]["P"][0][3] = [99]
        path.write_text(json.dumps(data))
    shoji._ktilde_matrix.cache_clear()
    assert _canonical(ktilde_matrix(a)) == good
    assert "ignoring" in caplog.text


def test_cache_entry_with_wrong_index_is_ignored(fresh_cache):
    a = Algebra("A", 3)
    good = _canonical(ktilde_matrix(a))
    key = shoji._cache_key(a, shoji.SHIPPED_CONVENTION)
    payload = cache.load("ktilde", key)
    payload["irreps"] = list(reversed(payload["irreps"]))
    cache.store("ktilde", key, payload)
    shoji._ktilde_matrix.cache_clear()
    assert _canonical(ktilde_matrix(a)) == good


def test_selftest_survives_corrupted_cache(fresh_cache, capsys):
    ktilde_matrix(Algebra("C", 2))
    for p in fresh_cache.iterdir():
        p.write_text("{")
    shoji._ktilde_matrix.cache_clear()
    assert cli.run(["selftest", "--max-rank", "2"]) == 0


def test_cache_clear(fresh_cache, capsys):
    ktilde_matrix(Algebra("A", 2))
    assert cli.run(["cache-clear"]) == 0
    assert not fresh_cache.exists()
    assert "removed 1 cache file" in capsys.readouterr().out
