import sys
import time
from typing import Final

from config.configuration import Configuration


class Loggable:
    """Mixin carrying the ``print`` logging convention used across the toolkit.

    Every component declares a ``_MODULE_NAME`` and a ``name``. When logging is enabled each message is written as
    ``<timestamp> - <module>.<name> - <message>``. Lines go to ``stderr`` so reports written on ``stdout`` stay
    byte-identical between runs.
    """
    _MODULE_NAME: Final[str] = 'models.utils.loggable'

    def __init__(self, name: str, enable_log: bool = None) -> None:
        super().__init__()
        self.name: str = name
        self._enable_log: bool = Configuration.get_log_enabled() if enable_log is None else enable_log

    def print(self, message: str) -> None:
        if self._enable_log:
            print(f'{time.time()} - {self._MODULE_NAME}.{self.name} - {message}', file=sys.stderr)

    @property
    def module_name(self) -> str:
        return self._MODULE_NAME
