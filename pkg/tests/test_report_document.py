import json
from fractions import Fraction

from models.algebra.rational_matrix import RatMatrix
from models.report.report_document import EXIT_SUCCESS, EXIT_UNCERTIFIED, ReportDocument, serialize
from models.toledo.toledo_report import MaximalJMSubspace


def _document():
    document = ReportDocument(query={'kind': 'grade', 'seed': 0}, schema_version='1.0', provenance={'seed': 0})
    document.add_section('values', {'rank': Fraction(3, 2), 'labels': (1, 0), 'matrix': RatMatrix.identity(2),
                                    'flag': True, 'missing': None})
    return document


def test_serialize_exact_values():
    assert serialize(Fraction(-2)) == '-2/1'
    assert serialize(RatMatrix([[1, '1/2']])) == [['1/1', '1/2']]
    assert serialize({1: (Fraction(1, 3),)}) == {'1': ['1/3']}
    assert serialize(True) is True


def test_serialize_dataclass_with_report_properties():
    hat = MaximalJMSubspace(s=RatMatrix.zeros(1, 1), hat_g0_basis=[RatMatrix.column([1])], hat_g1_basis=[],
                            parabolic_dim=1, c_hat_dim=0, hat_orbit_open=True, hat_algebra_reductive=True)
    serialized = serialize(hat)
    assert serialized['hat_dims'] == [1, 0]
    assert serialized['hat_g0_basis'] == [[['1/1']]]


def test_json_rendering_is_sorted_and_terminated():
    text = _document().to_json()
    assert text.endswith('}\n')
    payload = json.loads(text)
    assert payload['values']['rank'] == '3/2'
    assert payload['provenance'] == {'seed': 0, 'certification': {}}
    assert list(payload) == sorted(payload)


def test_text_rendering():
    lines = _document().to_text().splitlines()
    assert 'values.rank: 3/2' in lines
    assert 'values.labels: [1, 0]' in lines
    assert 'values.matrix: [[1/1, 0/1], [0/1, 1/1]]' in lines
    assert 'values.flag: true' in lines
    assert 'values.missing: -' in lines
    assert 'provenance.certification: {}' in lines
    assert lines == sorted(lines)


def test_exit_code_follows_certification():
    document = _document()
    assert document.exit_code == EXIT_SUCCESS
    document.certify('open_orbit', True)
    document.certify('representative', False)
    assert not document.certified
    assert document.exit_code == EXIT_UNCERTIFIED
    assert document.to_dict()['provenance']['certification'] == {'open_orbit': True, 'representative': False}


def test_render_dispatches_on_output():
    document = _document()
    assert document.render('json') == document.to_json()
    assert document.render('text') == document.to_text()
