"""Tests for settings loading."""

import json

import pytest

from orbitkit.config import Settings, load_settings


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("ORBITKIT_CONFIG", raising=False)
    monkeypatch.delenv("ORBITKIT_SEED", raising=False)


def test_defaults(tmp_path):
    assert load_settings(tmp_path / "missing.json") == Settings()


def test_file_values(tmp_path):
    path = tmp_path / "orbitkit.json"
    path.write_text(json.dumps({"seed": 3, "workers": 4, "debug_enabled": True}))
    settings = load_settings(path)
    assert (settings.seed, settings.workers, settings.debug_enabled) == (3, 4, True)
    assert settings.xi_samples == Settings().xi_samples


def test_env_config_path(tmp_path, monkeypatch):
    path = tmp_path / "other.json"
    path.write_text(json.dumps({"sample_budget": 50}))
    monkeypatch.setenv("ORBITKIT_CONFIG", str(path))
    assert load_settings().sample_budget == 50


def test_env_seed_overrides_file(tmp_path, monkeypatch):
    path = tmp_path / "orbitkit.json"
    path.write_text(json.dumps({"seed": 3}))
    monkeypatch.setenv("ORBITKIT_SEED", "42")
    assert load_settings(path).seed == 42


@pytest.mark.parametrize(
    "content",
    ["not json", "[1, 2]", json.dumps({"workers": 0}), json.dumps({"seed": "abc"})],
)
def test_bad_files_fall_back_to_defaults(tmp_path, content):
    path = tmp_path / "orbitkit.json"
    path.write_text(content)
    assert load_settings(path) == Settings()


def test_unknown_keys_ignored(tmp_path):
    path = tmp_path / "orbitkit.json"
    path.write_text(json.dumps({"colour": "red", "seed": 9}))
    assert load_settings(path).seed == 9


def test_bad_env_seed_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv("ORBITKIT_SEED", "soon")
    assert load_settings(tmp_path / "missing.json").seed == Settings().seed


def test_settings_validation():
    with pytest.raises(ValueError):
        Settings(xi_samples=0)
    with pytest.raises(ValueError):
        Settings(workers=0)
