import json
import os
from typing import List

from models.exception.missing_parameter import MissingParameterError


class Configuration:

    _MODULE_NAME = 'config.configuration'
    __config: dict = None
    __config_path: str = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'configuration.json')
    __log_override: bool = None

    # ----------------------------------------------------------------------------------------------------------------------#

    @staticmethod
    def reset_config():
        Configuration.__config = None
        Configuration.__log_override = None

    @staticmethod
    def set_config_path(path: str):
        Configuration.__config_path = path
        Configuration.__config = None

    @staticmethod
    def _config() -> dict:
        if Configuration.__config is None:
            configuration_file = open(Configuration.__config_path, 'r')
            Configuration.__config = json.load(configuration_file)
            configuration_file.close()
        return Configuration.__config

    @staticmethod
    def _section(section: str) -> dict:
        config = Configuration._config()
        if section not in config:
            raise MissingParameterError(module=Configuration._MODULE_NAME, name='configuration', parameter=section)
        return config[section]

    @staticmethod
    def get_schema_version() -> str:
        return Configuration._section('report')['schema_version']

    @staticmethod
    def get_default_output() -> str:
        return Configuration._section('report')['default_output']

    @staticmethod
    def get_generic_element() -> dict:
        return Configuration._section('generic_element')

    @staticmethod
    def get_max_attempts() -> int:
        return Configuration.get_generic_element()['max_attempts']

    @staticmethod
    def get_coefficient_primes() -> List[int]:
        return Configuration.get_generic_element()['coefficient_primes']

    @staticmethod
    def get_default_seed() -> int:
        return Configuration._section('query')['default_seed']

    @staticmethod
    def get_sweep_workers() -> int:
        return Configuration._section('sweep')['workers']

    @staticmethod
    def enable_log(enabled: bool):
        Configuration.__log_override = enabled

    @staticmethod
    def get_log_enabled() -> bool:
        if Configuration.__log_override is not None:
            return Configuration.__log_override
        return Configuration._section('log')['enable']
