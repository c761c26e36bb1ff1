from pathlib import Path

import pytest

from config.configuration import Configuration

GOLDEN_DIR = Path(__file__).resolve().parent / 'golden'


@pytest.fixture(autouse=True)
def _fresh_configuration():
    Configuration.reset_config()
    yield
    Configuration.reset_config()


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR
