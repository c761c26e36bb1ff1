from fractions import Fraction

import pytest

from models.exception.invalid_parameter_value import InvalidParameterValue
from models.exception.missing_parameter import MissingParameterError
from models.exception.usage_error import UsageError
from models.report.query_parser import build_parser, parse_query
from models.report.query_spec import QuerySpec


def test_grade_query():
    spec = parse_query(['grade', 'B3', '--labels', '1,0,1'])
    assert spec == QuerySpec(kind='grade', target='B3', labels=(1, 0, 1))
    assert spec.output == 'text'
    assert spec.seed == 0


def test_rank_query_with_bounds():
    spec = parse_query(['rank', 'sl3', '--theta', '1', '--genus', '3', '--lambda', '1/2', '--output', 'json',
                        '--seed', '4'])
    assert spec.theta == (1,)
    assert spec.genus == 3
    assert spec.lambda_ == Fraction(1, 2)
    assert spec.output == 'json'
    assert spec.seed == 4


def test_orbit_so_orbit_and_sweep_queries():
    assert parse_query(['orbit', 'sp4', '--partition', '2,2']).partition == (2, 2)
    spec = parse_query(['so-orbit', '--p', '2', '--q', '3', '--r1', '1', '--r2', '0'])
    assert (spec.p, spec.q, spec.r1, spec.r2) == (2, 3, 1, 0)
    sweep = parse_query(['sweep', 'b', '--max-rank', '3', '--workers', '2'])
    assert sweep.target == 'B'
    assert sweep.workers == 2


@pytest.mark.parametrize('argv', [
    [],
    ['rank'],
    ['grade', 'B3'],
    ['grade', 'B3', '--labels', '1,0,1', '--theta', '2'],
    ['grade', 'B3', '--labels', '1,x,1'],
    ['grade', 'B3', '--labels', '1,0,1', '--genus', '2'],
    ['rank', 'sl3', '--labels', '1,1', '--lambda', 'half'],
    ['sweep', 'E', '--max-rank', '3'],
    ['so-orbit', '--p', '2', '--q', '3', '--r1', '1'],
    ['frobnicate'],
])
def test_malformed_command_lines(argv):
    with pytest.raises(UsageError) as error:
        parse_query(argv)
    assert error.value.detail.startswith('toledo')
    assert str(error.value).endswith('argv.usage.malformed_arguments')


def test_inconsistent_fields():
    with pytest.raises(MissingParameterError):
        parse_query(['rank', 'sl3', '--labels', '1,1', '--lambda', '1/2'])
    with pytest.raises(InvalidParameterValue):
        parse_query(['rank', 'sl3', '--labels', '1,1', '--genus', '1'])
    with pytest.raises(InvalidParameterValue):
        parse_query(['sweep', 'A', '--max-rank', '0'])
    with pytest.raises(InvalidParameterValue):
        parse_query(['sweep', 'A', '--max-rank', '2', '--workers', '0'])


def test_help_mentions_exit_codes(capsys):
    with pytest.raises(SystemExit) as exit_request:
        build_parser().parse_args(['--help'])
    assert exit_request.value.code == 0
    assert 'exit codes' in capsys.readouterr().out


def test_query_spec_validation():
    with pytest.raises(InvalidParameterValue):
        QuerySpec(kind='plot', target='B3')
    with pytest.raises(MissingParameterError):
        QuerySpec(kind='orbit', target='sl3')
    with pytest.raises(InvalidParameterValue) as error:
        QuerySpec(kind='orbit', target='sl3', partition=(3,), genus=2)
    assert str(error.value).endswith('genus.not_accepted_by_this_kind')
    with pytest.raises(InvalidParameterValue):
        QuerySpec(kind='rank', target='sl3', labels=(1, 1), output='yaml')


def test_echo_leaves_out_presentation_fields():
    spec = QuerySpec(kind='rank', target='sl3', labels=(1, 1), genus=2, lambda_=Fraction(1, 3), output='json',
                     workers=3)
    assert spec.echo() == {'kind': 'rank', 'seed': 0, 'target': 'sl3', 'labels': [1, 1], 'genus': 2,
                           'lambda': '1/3'}


def test_from_config_json():
    spec = QuerySpec.from_config_json({'kind': 'rank', 'target': 'sl3', 'labels': [1, 1], 'genus': 2,
                                       'lambda': '1/3'})
    assert spec.labels == (1, 1)
    assert spec.lambda_ == Fraction(1, 3)
    with pytest.raises(MissingParameterError):
        QuerySpec.from_config_json({'target': 'sl3'})
