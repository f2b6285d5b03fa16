import pytest
from pydantic import ValidationError

from src.core.config import Settings, settings


def test_defaults():
    s = Settings()
    assert s.APP_NAME == "HyperTorsion"
    assert s.LOG_LEVEL == "WARNING"
    assert s.GALOIS_PRIME_BOUND == 1000
    assert s.PRIME_SEARCH_BOUND == 10000
    assert s.CERTIFICATE_PRIMES == 3
    assert (s.FIXTURES_DIR / "worked_examples.json").is_file()


def test_default_order_bound():
    assert settings.default_order_bound(3) == 56
    assert Settings(ORDER_BOUND_FACTOR=1).default_order_bound(5) == 22


def test_environment_is_ignored(monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("GALOIS_PRIME_BOUND", "7")
    s = Settings()
    assert s.LOG_LEVEL == "WARNING"
    assert s.GALOIS_PRIME_BOUND == 1000


def test_log_level_is_normalized():
    assert Settings(LOG_LEVEL=" info ").LOG_LEVEL == "INFO"
    with pytest.raises(ValidationError):
        Settings(LOG_LEVEL="chatty")


@pytest.mark.parametrize("field", ["ORDER_BOUND_FACTOR", "GALOIS_PRIME_BOUND", "CERTIFICATE_PRIMES"])
def test_bounds_must_be_positive(field):
    with pytest.raises(ValidationError):
        Settings(**{field: 0})
