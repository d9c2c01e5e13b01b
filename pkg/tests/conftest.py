import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.delenv("EVENCARRY_CACHE_DIR", raising=False)
    return tmp_path / "cache"
