import json
from pathlib import Path

import pytest

import config.configuration
from config.configuration import Configuration
from models.exception.missing_parameter import MissingParameterError
from models.utils.loggable import Loggable

DEFAULT_PATH = str(Path(config.configuration.__file__).resolve().parent / 'configuration.json')


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / 'configuration.json'
    yield path
    Configuration.set_config_path(DEFAULT_PATH)


def test_defaults():
    assert Configuration.get_schema_version() == '1.0'
    assert Configuration.get_default_output() == 'text'
    assert Configuration.get_max_attempts() == 64
    assert Configuration.get_coefficient_primes()[:3] == [2, 3, 5]
    assert Configuration.get_default_seed() == 0
    assert Configuration.get_sweep_workers() == 1
    assert not Configuration.get_log_enabled()


def test_missing_section(config_file):
    config_file.write_text(json.dumps({'report': {'schema_version': '2.0', 'default_output': 'json'}}))
    Configuration.set_config_path(str(config_file))
    assert Configuration.get_schema_version() == '2.0'
    with pytest.raises(MissingParameterError) as error:
        Configuration.get_sweep_workers()
    assert 'sweep' in str(error.value)


def test_log_override():
    Configuration.enable_log(True)
    assert Configuration.get_log_enabled()
    Configuration.reset_config()
    assert not Configuration.get_log_enabled()


class _Recorder(Loggable):
    _MODULE_NAME = 'tests.recorder'


def test_loggable_writes_to_stderr_only_when_enabled(capsys):
    _Recorder(name='quiet').print('hidden')
    Configuration.enable_log(True)
    recorder = _Recorder(name='loud')
    recorder.print('visible')
    captured = capsys.readouterr()
    assert captured.out == ''
    assert 'hidden' not in captured.err
    assert 'tests.recorder.loud - visible' in captured.err
    assert recorder.module_name == 'tests.recorder'
