# ABOUTME: Unit tests for HyperdetSettings and the YAML settings loader.
# ABOUTME: Covers defaults, HYPERDET_* overrides, registration and file validation.

from pathlib import Path

import pytest
import yaml
from pydantic import ValidationError

from hyperdet.common.config.constants import DEFAULT_MAX_RETRIES, DEFAULT_NULLSPACE_TOL
from hyperdet.common.config.hyperdet_settings import (
    HyperdetSettings,
    get_hyperdet_settings,
    set_hyperdet_settings,
)
from hyperdet.common.config.settings_loader import load_settings_file


class TestHyperdetSettings:
    """Tests for HyperdetSettings."""

    def test_default_values(self) -> None:
        settings = HyperdetSettings(_env_file=None)  # type: ignore[call-arg]

        assert settings.nullspace_tol == DEFAULT_NULLSPACE_TOL
        assert settings.max_retries == DEFAULT_MAX_RETRIES
        assert settings.threads == 1

    def test_loads_from_environment(self, monkeypatch) -> None:
        monkeypatch.setenv("HYPERDET_MAX_RETRIES", "7")
        monkeypatch.setenv("HYPERDET_NULLSPACE_TOL", "1e-11")

        settings = get_hyperdet_settings()

        assert settings.max_retries == 7
        assert settings.nullspace_tol == 1e-11

    def test_rejects_invalid_values(self) -> None:
        with pytest.raises(ValidationError):
            HyperdetSettings(threads=0)

    def test_registered_instance_wins(self, monkeypatch) -> None:
        monkeypatch.setenv("HYPERDET_MAX_RETRIES", "7")
        set_hyperdet_settings(HyperdetSettings(max_retries=1))

        assert get_hyperdet_settings().max_retries == 1

        set_hyperdet_settings(None)
        assert get_hyperdet_settings().max_retries == 7


class TestLoadSettingsFile:
    """Tests for load_settings_file."""

    def test_reads_hyperdet_section(self, tmp_path: Path) -> None:
        path = tmp_path / "hyperdet.yaml"
        path.write_text("hyperdet:\n  nullspace_tol: 1.0e-10\n  max_retries: 5\n")

        settings = load_settings_file(path)

        assert settings.nullspace_tol == 1e-10
        assert settings.max_retries == 5

    def test_empty_file_gives_defaults(self, tmp_path: Path) -> None:
        path = tmp_path / "empty.yaml"
        path.write_text("")

        assert load_settings_file(path).max_retries == DEFAULT_MAX_RETRIES

    def test_sample_config_loads(self) -> None:
        path = Path(__file__).resolve().parents[3] / "configs" / "hyperdet.yaml"

        assert load_settings_file(path).hyperbolicity_trials == 50

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(FileNotFoundError):
            load_settings_file(tmp_path / "nope.yaml")

    def test_section_must_be_mapping(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.yaml"
        path.write_text("hyperdet: [1, 2]\n")

        with pytest.raises(ValueError, match="must be a mapping"):
            load_settings_file(path)

    def test_invalid_yaml(self, tmp_path: Path) -> None:
        path = tmp_path / "broken.yaml"
        path.write_text("hyperdet: {max_retries: [\n")

        with pytest.raises(yaml.YAMLError):
            load_settings_file(path)

    def test_invalid_value(self, tmp_path: Path) -> None:
        path = tmp_path / "negative.yaml"
        path.write_text("hyperdet:\n  max_retries: -1\n")

        with pytest.raises(ValidationError):
            load_settings_file(path)
