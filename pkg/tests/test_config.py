import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root))

from config import Settings, get_settings

_VARIABLES = (
    "DIOPHANTINE_LOG_LEVEL",
    "DIOPHANTINE_ORACLE_CAP",
    "DIOPHANTINE_ORACLE_RADIUS",
    "DIOPHANTINE_SOLVE_TIMEOUT",
)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in _VARIABLES:
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    assert get_settings() == Settings()
    assert Settings().oracle_cap == 10 ** 8


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("DIOPHANTINE_LOG_LEVEL", "debug")
    monkeypatch.setenv("DIOPHANTINE_ORACLE_CAP", "5000")
    monkeypatch.setenv("DIOPHANTINE_ORACLE_RADIUS", "4")
    monkeypatch.setenv("DIOPHANTINE_SOLVE_TIMEOUT", "2.5")
    assert get_settings() == Settings(log_level="DEBUG", oracle_cap=5000, oracle_radius=4, solve_timeout=2.5)


@pytest.mark.parametrize("name, value", [
    ("DIOPHANTINE_LOG_LEVEL", "LOUD"),
    ("DIOPHANTINE_ORACLE_CAP", "many"),
    ("DIOPHANTINE_ORACLE_CAP", "0"),
    ("DIOPHANTINE_ORACLE_RADIUS", "-3"),
    ("DIOPHANTINE_SOLVE_TIMEOUT", "soon"),
])
def test_malformed_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(EnvironmentError, match=name):
        get_settings()


def test_blank_integer_uses_default(monkeypatch):
    monkeypatch.setenv("DIOPHANTINE_ORACLE_RADIUS", " ")
    assert get_settings().oracle_radius == 10
