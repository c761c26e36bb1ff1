from __future__ import annotations

import argparse
from typing import Final, List, Sequence

from config.configuration import Configuration
from models.algebra.rational_matrix import to_rational
from models.exception.framework_base_exception import FrameworkBaseException
from models.exception.usage_error import UsageError
from models.report.query_spec import OUTPUTS, QuerySpec

_MODULE_NAME: Final[str] = 'models.report.query_parser'

EXIT_CODES_HELP: Final[str] = (
    'exit codes: 0 success; 2 malformed query or input error (the error code is written on stderr); '
    '3 partial result, some certification flag of the report is false'
)


class _QueryArgumentParser(argparse.ArgumentParser):

    def error(self, message: str):
        raise UsageError(module=_MODULE_NAME, detail=f'{self.prog}: {message}')


def _int_list(text: str) -> List[int]:
    if text.strip() == '':
        return []
    try:
        return [int(token) for token in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma separated integers, got {text!r}')


def _rational(text: str):
    try:
        return to_rational(text)
    except FrameworkBaseException:
        raise argparse.ArgumentTypeError(f'expected a rational like 3/2, got {text!r}')


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--output', choices=OUTPUTS, default=Configuration.get_default_output(),
                        help='report format')
    common.add_argument('--seed', type=int, default=Configuration.get_default_seed(),
                        help='seed of the open orbit search')
    common.add_argument('--verbose', action='store_true', help='log progress on stderr')
    common.add_argument('--workers', type=int, default=Configuration.get_sweep_workers(),
                        help='parallel sweep items')
    return common


def _add_zeta_options(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('--labels', type=_int_list, help='Dynkin labels, e.g. 1,0,1')
    group.add_argument('--theta', type=_int_list, help='nodes (1 based) of the Levi, e.g. 2')


def _add_bound_options(parser: argparse.ArgumentParser):
    parser.add_argument('--genus', type=int, help='genus of the curve for the Arakelov-Milnor bounds')
    parser.add_argument('--lambda', dest='lambda_', type=_rational, help='stability parameter, e.g. 1/2')


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _QueryArgumentParser(prog='toledo', description='Exact Toledo data of graded simple Lie algebras.',
                                  epilog=EXIT_CODES_HELP)
    commands = parser.add_subparsers(dest='kind', required=True, parser_class=_QueryArgumentParser)

    grade = commands.add_parser('grade', parents=[common], epilog=EXIT_CODES_HELP,
                                help='root level data of a grading, any simple type (e.g. B3, G2)')
    grade.add_argument('target', help='Cartan type')
    _add_zeta_options(grade)

    rank = commands.add_parser('rank', parents=[common], epilog=EXIT_CODES_HELP,
                               help='Toledo report of a classical matrix algebra (sl5, so7, sp4)')
    rank.add_argument('target', help='matrix family and size')
    _add_zeta_options(rank)
    _add_bound_options(rank)

    orbit = commands.add_parser('orbit', parents=[common], epilog=EXIT_CODES_HELP,
                                help='nilpotent orbit with the given Jordan type')
    orbit.add_argument('target', help='matrix family and size')
    orbit.add_argument('--partition', type=_int_list, required=True, help='Jordan block sizes, e.g. 2,2,1')

    so_orbit = commands.add_parser('so-orbit', parents=[common], epilog=EXIT_CODES_HELP,
                                   help='GL_p x SO_q orbit (r1, r2) in Hom(C^p, C^q)')
    for name in ('p', 'q', 'r1', 'r2'):
        so_orbit.add_argument(f'--{name}', type=int, required=True)
    _add_bound_options(so_orbit)

    sweep = commands.add_parser('sweep', parents=[common], epilog=EXIT_CODES_HELP,
                                help='every 0/1 labeling of a classical type up to a rank')
    sweep.add_argument('target', type=str.upper, choices=('A', 'B', 'C', 'D'), help='Cartan family')
    sweep.add_argument('--max-rank', dest='max_rank', type=int, required=True)
    return parser


def parse_query(argv: Sequence[str]) -> QuerySpec:
    """Parses command line tokens (without the program name).

    :raises UsageError: For a malformed command line, including flags that do not belong to the command.
    :raises InvalidParameterValue: If the parsed fields are inconsistent.
    """
    arguments = vars(build_parser().parse_args(list(argv)))
    for name in ('labels', 'theta', 'partition'):
        if arguments.get(name) is not None:
            arguments[name] = tuple(arguments[name])
    return QuerySpec(**{name: value for name, value in arguments.items()})
