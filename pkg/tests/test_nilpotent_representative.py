import pytest

from models.algebra.rational_matrix import RatMatrix
from models.exception.invalid_parameter_value import InvalidParameterValue
from models.orbit.nilpotent_representative import (even_jm_grading_labels, h_spectrum, jordan_representative_sl,
                                                   nilpotent_representative, orbit_is_constructible,
                                                   triple_centralizer_dim, weighted_dynkin_labels)
from models.orbit.partition import Partition, all_partitions, is_distinguished, partition_valid


def test_jordan_representative():
    e = jordan_representative_sl(4, Partition((2, 2)))
    assert e == RatMatrix.unit(4, 0, 1) + RatMatrix.unit(4, 2, 3)
    with pytest.raises(InvalidParameterValue):
        jordan_representative_sl(5, Partition((2, 2)))


def test_h_spectrum():
    assert h_spectrum(RatMatrix.diagonal([0, 2, -2])) == [2, 0, -2]
    with pytest.raises(InvalidParameterValue):
        h_spectrum(RatMatrix([[0, 1], [0, 0]]))


def test_sl_representative_lies_in_the_principal_grading():
    representative = nilpotent_representative('sl', 3, Partition((2, 1)))
    assert representative.e == RatMatrix.unit(3, 0, 1)
    assert representative.ga.labels == [1, 1]
    assert representative.matches
    assert h_spectrum(representative.triple.h) == [1, 0, -1]


@pytest.mark.parametrize('family, size', [('so', 7), ('sp', 6)])
def test_valid_partitions_are_constructible(family, size):
    for partition in all_partitions(size):
        assert orbit_is_constructible(family, size, partition) == partition_valid(family, size, partition)


def test_zero_orbit():
    representative = nilpotent_representative('so', 5, Partition((1, 1, 1, 1, 1)))
    assert representative.e.is_zero()
    assert representative.matches


def test_weighted_dynkin_labels():
    assert weighted_dynkin_labels('so', 7, Partition((7,))) == [2, 2, 2]
    assert weighted_dynkin_labels('sl', 3, Partition((3,))) == [2, 2]
    assert weighted_dynkin_labels('so', 7, Partition((3, 3, 1))) == [0, 2, 0]
    assert weighted_dynkin_labels('sp', 4, Partition((2, 2))) == [0, 2]
    with pytest.raises(InvalidParameterValue):
        weighted_dynkin_labels('sp', 4, Partition((3, 1)))


def test_even_jm_grading_labels():
    assert even_jm_grading_labels('so', 7, Partition((3, 3, 1))) == [0, 1, 0]
    assert even_jm_grading_labels('so', 7, Partition((5, 1, 1))) == [1, 1, 0]
    assert even_jm_grading_labels('so', 7, Partition((2, 2, 1, 1, 1))) is None


@pytest.mark.parametrize('family, size, parts, expected', [
    ('sp', 4, (4,), 0),
    ('sp', 4, (2, 2), 1),
    ('so', 7, (7,), 0),
    ('so', 7, (3, 3, 1), 1),
    ('so', 7, (5, 1, 1), 1),
    ('sl', 4, (2, 2), 3),
])
def test_triple_centralizer_dim(family, size, parts, expected):
    partition = Partition(parts)
    assert triple_centralizer_dim(family, size, partition) == expected
    assert (expected == 0) == is_distinguished(family, size, partition)


def test_triple_centralizer_needs_a_valid_orbit():
    with pytest.raises(InvalidParameterValue):
        triple_centralizer_dim('sp', 4, Partition((3, 1)))
