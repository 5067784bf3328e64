import logging

import pytest

from circlespace.config import DEFAULT_CONFIG, RunConfig, load_config, parse_real
from circlespace.errors import ConfigError


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("CIRCLESPACE_CONFIG", raising=False)
    return tmp_path


def test_defaults_without_any_file():
    assert load_config() == DEFAULT_CONFIG
    assert RunConfig.from_mapping(load_config()) == RunConfig()


def test_circlespace_toml(isolated):
    (isolated / "circlespace.toml").write_text('[circlespace]\nalpha = "1/137"\nformat = "table"\n')
    config = RunConfig.from_mapping(load_config())
    assert config.alpha == 1 / 137
    assert config.format == "table"
    assert config.seed == DEFAULT_CONFIG["seed"]


def test_pyproject_section(isolated):
    (isolated / "pyproject.toml").write_text('[tool.circlespace]\nseed = 7\nmax_n_r = 1\n\n[tool.other]\nseed = 9\n')
    config = RunConfig.from_mapping(load_config())
    assert (config.seed, config.max_n_r) == (7, 1)


def test_circlespace_toml_wins_over_pyproject(isolated):
    (isolated / "circlespace.toml").write_text("[circlespace]\nseed = 1\n")
    (isolated / "pyproject.toml").write_text("[tool.circlespace]\nseed = 2\n")
    assert load_config()["seed"] == 1


def test_environment_variable(isolated, monkeypatch):
    custom = isolated / "custom.toml"
    custom.write_text("[circlespace]\ntol = 1e-9\n")
    (isolated / "circlespace.toml").write_text("[circlespace]\ntol = 1e-6\n")
    monkeypatch.setenv("CIRCLESPACE_CONFIG", str(custom))
    assert load_config()["tol"] == 1e-9


def test_explicit_path(isolated):
    path = isolated / "run.toml"
    path.write_text("[circlespace]\nmass_ev = 938272088.16\n")
    assert load_config(str(path))["mass_ev"] == 938272088.16


def test_missing_explicit_path_warns(isolated, caplog):
    with caplog.at_level(logging.WARNING, logger="circlespace"):
        config = load_config(str(isolated / "absent.toml"))
    assert config == DEFAULT_CONFIG
    assert "not found" in caplog.text


def test_broken_toml_falls_back_to_defaults(isolated, caplog):
    (isolated / "circlespace.toml").write_text("[circlespace\nalpha = ")
    with caplog.at_level(logging.WARNING, logger="circlespace"):
        config = load_config()
    assert config == DEFAULT_CONFIG
    assert "Ignoring unreadable configuration" in caplog.text


@pytest.mark.parametrize("text, expected", [("1/137", 1 / 137), (" 0.5 ", 0.5), ("1e-12", 1e-12), (3, 3.0)])
def test_parse_real(text, expected):
    assert parse_real(text) == expected


@pytest.mark.parametrize("text", ["abc", "1/0", ""])
def test_parse_real_rejects(text):
    with pytest.raises(ConfigError):
        parse_real(text)


@pytest.mark.parametrize(
    "values",
    [{"alpha": 1.5}, {"alpha": 0}, {"mass_ev": 0}, {"tol": -1e-12}, {"format": "xml"}],
)
def test_invalid_settings(values):
    with pytest.raises(ConfigError):
        RunConfig.from_mapping(values)


def test_from_mapping_ignores_unknown_and_missing_values():
    config = RunConfig.from_mapping({"alpha": "1/137", "seed": "5", "colour": "blue", "tol": None})
    assert config.alpha == 1 / 137
    assert config.seed == 5
    assert config.tol == DEFAULT_CONFIG["tol"]
