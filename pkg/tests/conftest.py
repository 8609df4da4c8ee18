import pytest


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("TURAN_CACHE", str(tmp_path / "cache.jsonl"))
