from pathlib import Path

import pytest

CONFIGS_DIR = Path(__file__).resolve().parents[3] / "configs"

SINCOS = """
specification = "mu1 or mu2"

[environment]
kind = "synthetic-sincos"

[optimizer]
restarts = 10
local_budget = 40

[run]
budget = 2
seed = 0
"""


@pytest.fixture
def configs_dir() -> Path:
    return CONFIGS_DIR


@pytest.fixture
def write_config(tmp_path):
    """Write TOML text to a file under tmp_path and return its path."""

    def write(text: str, name: str = "run.toml") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write


@pytest.fixture
def sincos_config(write_config) -> Path:
    return write_config(SINCOS, "sincos.toml")
