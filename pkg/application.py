import contextlib
import io
import sys
from typing import Final, Sequence, Tuple

from config.configuration import Configuration
from models.exception.framework_base_exception import FrameworkBaseException
from models.exception.internal_inconsistency import InternalInconsistency
from models.exception.usage_error import UsageError
from models.report.query_parser import parse_query
from models.report.query_runner import QueryRunner
from models.report.report_document import EXIT_INPUT_ERROR, EXIT_SUCCESS
from models.utils.loggable import Loggable


class Application(Loggable):
    """Command line front end: parses one query, runs it and renders the report.

    :param stderr: Stream receiving error codes.
    :param enable_log: Overrides the configured log switch; ``--verbose`` turns it on as well.
    """
    _MODULE_NAME: Final[str] = 'application'

    def __init__(self, stderr=None, enable_log: bool = None) -> None:
        super().__init__(name='toledo', enable_log=enable_log)
        self._stderr = stderr if stderr is not None else sys.stderr

    def run(self, argv: Sequence[str]) -> Tuple[int, str]:
        """Returns the exit code and the rendered report (or the help text)."""
        help_text = io.StringIO()
        try:
            with contextlib.redirect_stdout(help_text):
                spec = parse_query(argv)
        except SystemExit as exit_request:
            return int(exit_request.code or EXIT_SUCCESS), help_text.getvalue()
        except UsageError as error:
            self._report_error(error, error.detail)
            return EXIT_INPUT_ERROR, ''
        except FrameworkBaseException as error:
            self._report_error(error)
            return EXIT_INPUT_ERROR, ''
        if spec.verbose:
            Configuration.enable_log(True)
            self._enable_log = True
        try:
            document = QueryRunner().run(spec)
        except InternalInconsistency as error:
            self._report_error(error)
            self.print(f'aborting {spec.kind}: {error.cause}')
            raise
        except FrameworkBaseException as error:
            self._report_error(error)
            return EXIT_INPUT_ERROR, ''
        return document.exit_code, document.render(spec.output)

    def _report_error(self, error: FrameworkBaseException, detail: str = None):
        print(str(error), file=self._stderr)
        if detail:
            print(detail, file=self._stderr)
