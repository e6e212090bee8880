import logging

import pytest
from pydantic import ValidationError

from config import CONFIG_PATH, Settings, get_settings
from src.cli.config import LOG_LEVEL_ENV, SETTINGS_ENV, configure_logging, load_runtime_settings


def test_default_settings_file() -> None:
    settings = get_settings(CONFIG_PATH)

    assert settings.reduction.step_cap_factor == 4
    assert settings.reduction.prefer_whole_summand is True
    assert settings.certificate.version == 1
    assert settings.fuzz.max_summands == 12
    assert settings.logging.level == "WARNING"


def test_partial_file_keeps_defaults(tmp_path) -> None:
    path = tmp_path / "settings.yaml"
    path.write_text("fuzz:\n  seed: 42\n", encoding="utf-8")

    settings = get_settings(path)

    assert settings.fuzz.seed == 42
    assert settings.fuzz.iterations == Settings().fuzz.iterations


def test_missing_file(tmp_path) -> None:
    with pytest.raises(FileNotFoundError):
        get_settings(tmp_path / "absent.yaml")


@pytest.mark.parametrize(
    "text",
    ["reduction:\n  step_cap_factor: 0\n", "logging:\n  level: chatty\n", "fuzz:\n  workers: -2\n"],
)
def test_invalid_values(tmp_path, text) -> None:
    path = tmp_path / "settings.yaml"
    path.write_text(text, encoding="utf-8")

    with pytest.raises(ValidationError):
        get_settings(path)


def test_log_level_is_normalized(tmp_path) -> None:
    path = tmp_path / "settings.yaml"
    path.write_text("logging:\n  level: debug\n", encoding="utf-8")

    assert get_settings(path).logging.level == "DEBUG"


def test_environment_overrides(tmp_path, monkeypatch) -> None:
    path = tmp_path / "settings.yaml"
    path.write_text("fuzz:\n  seed: 9\n", encoding="utf-8")
    monkeypatch.setenv(SETTINGS_ENV, str(path))
    monkeypatch.setenv(LOG_LEVEL_ENV, "error")

    settings = load_runtime_settings()

    assert settings.fuzz.seed == 9
    assert settings.logging.level == "ERROR"


def test_unknown_environment_log_level(monkeypatch) -> None:
    monkeypatch.setenv(LOG_LEVEL_ENV, "verbose")

    with pytest.raises(ValueError):
        load_runtime_settings(CONFIG_PATH)


def test_configure_logging_debug_flag(monkeypatch) -> None:
    calls = {}
    monkeypatch.setattr(logging, "basicConfig", lambda **kwargs: calls.update(kwargs))

    configure_logging(Settings(), debug=True)

    assert calls["level"] == logging.DEBUG
