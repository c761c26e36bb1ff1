from fractions import Fraction

import pytest

from models.exception.invalid_parameter_value import InvalidParameterValue
from models.orbit.partition import (Partition, all_partitions, h_eigenvalues, is_distinguished, is_even_orbit,
                                    partition_valid, sl_centralizer_dim, toledo_rank_sl)


def test_partition_construction():
    assert Partition.of([1, 2, 2]).parts == (2, 2, 1)
    assert Partition.parse('3, 1').parts == (3, 1)
    assert str(Partition((2, 2, 1))) == '2,2,1'
    assert Partition((3, 1)).total == 4


@pytest.mark.parametrize('parts', [(), (1, 2), (2, 0), (2, True)])
def test_invalid_partitions(parts):
    with pytest.raises(InvalidParameterValue):
        Partition(parts)


def test_parse_rejects_text():
    with pytest.raises(InvalidParameterValue):
        Partition.parse('3,x')


def test_conjugate():
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    assert Partition((2, 2, 1)).conjugate() == Partition((3, 2))


def test_all_partitions():
    partitions = all_partitions(4)
    assert len(partitions) == 5
    assert partitions[0] == Partition((4,))
    assert partitions[-1] == Partition((1, 1, 1, 1))
    assert len(all_partitions(7)) == 15


@pytest.mark.parametrize('family, size, parts, valid', [
    ('sl', 4, (3, 1), True),
    ('so', 7, (2, 2, 1, 1, 1), True),
    ('so', 7, (2, 1, 1, 1, 1, 1), False),
    ('so', 7, (3, 3, 1), True),
    ('sp', 4, (3, 1), False),
    ('sp', 4, (2, 1, 1), True),
    ('sp', 4, (2, 2), True),
    ('sp', 6, (3, 3), True),
])
def test_parity_rule(family, size, parts, valid):
    assert partition_valid(family, size, Partition(parts)) == valid


def test_partition_must_fill_the_size():
    with pytest.raises(InvalidParameterValue):
        partition_valid('sl', 5, Partition((3, 1)))
    with pytest.raises(InvalidParameterValue):
        partition_valid('su', 4, Partition((3, 1)))


def test_h_eigenvalues_and_evenness():
    assert h_eigenvalues(Partition((3, 1))) == [2, 0, 0, -2]
    assert h_eigenvalues(Partition((2, 1))) == [1, 0, -1]
    assert is_even_orbit(Partition((3, 1)))
    assert is_even_orbit(Partition((2, 2)))
    assert not is_even_orbit(Partition((2, 1)))


@pytest.mark.parametrize('family, size, parts, distinguished', [
    ('so', 7, (7,), True),
    ('so', 7, (5, 1, 1), False),
    ('so', 7, (3, 3, 1), False),
    ('so', 9, (5, 3, 1), True),
    ('sp', 4, (4,), True),
    ('sp', 4, (2, 2), False),
    ('sp', 6, (4, 2), True),
    ('sl', 4, (4,), True),
    ('sl', 4, (3, 1), False),
])
def test_distinguished(family, size, parts, distinguished):
    assert is_distinguished(family, size, Partition(parts)) == distinguished


def test_distinguished_needs_a_valid_orbit():
    with pytest.raises(InvalidParameterValue):
        is_distinguished('sp', 4, Partition((3, 1)))


@pytest.mark.parametrize('parts, rank', [((3,), 4), ((2, 1), 1), ((2, 2, 1), 2), ((5,), 20), ((1, 1), 0)])
def test_sl_toledo_rank_formula(parts, rank):
    assert toledo_rank_sl(Partition(parts)) == Fraction(rank)


def test_sl_centralizer_dim():
    assert sl_centralizer_dim(Partition((3,))) == 2
    assert sl_centralizer_dim(Partition((2, 2, 1))) == 12
    assert sl_centralizer_dim(Partition((1, 1, 1))) == 8
