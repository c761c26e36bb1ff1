from fractions import Fraction

import pytest

from models.algebra.lie_type import LieType
from models.algebra.root_system import build_root_system
from models.exception.invalid_parameter_value import InvalidParameterValue

# (type, positive roots, dimension, dual Coxeter number)
_TYPES = [
    ('A1', 1, 3, 2),
    ('A2', 3, 8, 3),
    ('A4', 10, 24, 5),
    ('B2', 4, 10, 3),
    ('B3', 9, 21, 5),
    ('C3', 9, 21, 4),
    ('D4', 12, 28, 6),
    ('G2', 6, 14, 4),
    ('F4', 24, 52, 9),
    ('E6', 36, 78, 12),
    ('E7', 63, 133, 18),
]


def test_lie_type_parsing():
    assert LieType.parse('b3') == LieType('B', 3)
    assert str(LieType.parse('E8')) == 'E8'
    assert LieType.parse_family('sp4') == ('sp', 4)
    assert LieType.from_matrix_family('so', 7) == LieType('B', 3)
    assert LieType.from_matrix_family('so', 8) == LieType('D', 4)
    assert LieType('C', 3).matrix_family() == ('sp', 6)


@pytest.mark.parametrize('family, rank', [('E', 5), ('B', 1), ('F', 3), ('G', 3), ('H', 2)])
def test_lie_type_rejects_invalid_pairs(family, rank):
    with pytest.raises(InvalidParameterValue):
        LieType(family, rank)


def test_matrix_model_limits():
    with pytest.raises(InvalidParameterValue):
        LieType.from_matrix_family('so', 3)
    with pytest.raises(InvalidParameterValue):
        LieType('G', 2).matrix_family()
    with pytest.raises(InvalidParameterValue):
        LieType.parse('B-3')


@pytest.mark.parametrize('name, positive, dimension, dual_coxeter', _TYPES)
def test_root_counts_and_long_root_norm(name, positive, dimension, dual_coxeter):
    rs = build_root_system(LieType.parse(name))
    assert len(rs.positive_roots) == positive
    assert rs.dimension == dimension
    # long roots have Killing norm 1/h∨
    assert rs.dual_norm(rs.highest_root) == Fraction(1, dual_coxeter)


def test_cartan_matrix_convention():
    rs = build_root_system(LieType('B', 2))
    assert rs.cartan_matrix == ((2, -1), (-2, 2))
    assert rs.coroot_pairing((1, 1), 1) == 0


def test_highest_roots():
    assert build_root_system(LieType('B', 3)).highest_root == (1, 2, 2)
    assert build_root_system(LieType('G', 2)).highest_root == (3, 2)
    assert build_root_system(LieType('C', 3)).highest_root == (2, 2, 1)


def test_roots_are_closed_under_negation():
    rs = build_root_system(LieType('F', 4))
    for root in rs.roots():
        assert rs.is_root(rs.negate(root))
    assert not rs.is_root((0, 0, 0, 0))


def test_killing_form_on_coroots():
    rs = build_root_system(LieType('A', 1))
    assert rs.killing_on_cartan().to_rows() == [[8]]
    assert rs.dual_norm((1,)) == Fraction(1, 2)
    assert rs.dual_norm((1,), Fraction(2)) == Fraction(1, 4)


def test_dual_vector_rejects_wrong_length():
    with pytest.raises(InvalidParameterValue):
        build_root_system(LieType('A', 2)).dual_vector([1])
