from fractions import Fraction

import pytest

from models.exception.invalid_parameter_value import InvalidParameterValue
from models.orbit.so_orbit_label import (SOOrbitLabel, all_labels, expected_h, so_grading, so_orbit_representative,
                                         u_matrix)
from models.toledo.am_bounds import so_degree_bound
from models.toledo.toledo_context import ToledoContext

SO_GRID = [(p, q) for p in range(1, 5) for q in range(2, 5) if 2 * p + q >= 4]


def test_label_properties():
    label = SOOrbitLabel(2, 3, 1, 1)
    assert label.size == 7
    assert label.toledo_rank == 3
    assert not label.is_open
    assert SOOrbitLabel(2, 3, 2, 0).is_open
    assert SOOrbitLabel(2, 3, 0, 1).dominated_by(label)
    assert not label.dominated_by(SOOrbitLabel(2, 3, 2, 0))


@pytest.mark.parametrize('p, q, r1, r2', [(1, 2, 1, 1), (2, 1, 0, 1), (1, 1, 0, 0), (0, 4, 0, 0), (2, 3, -1, 0)])
def test_invalid_labels(p, q, r1, r2):
    with pytest.raises(InvalidParameterValue):
        SOOrbitLabel(p, q, r1, r2)


def test_all_labels():
    assert all_labels(1, 2) == [SOOrbitLabel(1, 2, 0, 0), SOOrbitLabel(1, 2, 0, 1), SOOrbitLabel(1, 2, 1, 0)]
    assert len(all_labels(2, 3)) == 5


def test_u_matrix_of_the_open_orbit():
    u = u_matrix(SOOrbitLabel(1, 2, 1, 0))
    assert u.to_rows() == [[1], [1]]


def test_so_grading_labels():
    assert so_grading(1, 2).labels == [1, 1]
    assert so_grading(2, 3).labels == [0, 1, 0]
    assert so_grading(2, 3).dim(1) == 6


@pytest.mark.parametrize('p, q', SO_GRID)
def test_normal_forms(p, q):
    context = ToledoContext(so_grading(p, q))
    open_rank = Fraction(2 * min(p, q))
    for label in all_labels(p, q):
        e = so_orbit_representative(label)
        assert context.ga.in_piece(e, 1)
        rank = context.toledo_rank(e)
        assert rank == label.toledo_rank
        if not e.is_zero():
            assert context.triple(e).h == expected_h(label)
        is_open = context.ga.orbit_is_open(e)
        assert is_open == label.is_open
        assert (rank == open_rank) == is_open


@pytest.mark.parametrize('p, q', SO_GRID)
def test_open_orbit_rank(p, q):
    context = ToledoContext(so_grading(p, q))
    phvs = context.phvs_toledo_rank(0)
    assert phvs.certified
    assert phvs.rank == Fraction(2 * min(p, q))


@pytest.mark.parametrize('p, q', SO_GRID)
@pytest.mark.parametrize('genus', [2, 3])
def test_degree_bounds_over_the_grid(p, q, genus):
    for label in all_labels(p, q):
        expected = -(label.r1 + Fraction(label.r2, 2)) * (2 * genus - 2)
        assert so_degree_bound(label, genus) == expected
