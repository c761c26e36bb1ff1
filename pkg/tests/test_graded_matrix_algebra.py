import itertools
from fractions import Fraction

import pytest

from models.algebra.graded_matrix_algebra import (GradedMatrixAlgebra, build_classical, centralizer_in,
                                                  generic_g1_element, orbit_is_open)
from models.algebra.grading import make_grading
from models.algebra.lie_type import LieType
from models.algebra.matrix_lie_algebra import build_matrix_algebra
from models.algebra.rational_matrix import RatMatrix
from models.algebra.root_system import build_root_system
from models.exception.invalid_parameter_value import InvalidParameterValue
from models.exception.unsupported_operation import UnsupportedOperation

E12 = RatMatrix.unit(3, 0, 1)
E23 = RatMatrix.unit(3, 1, 2)
E13 = RatMatrix.unit(3, 0, 2)


@pytest.fixture
def sl3_principal():
    return build_classical('sl', 3, labels=[1, 1])


def test_principal_pieces(sl3_principal):
    assert sl3_principal.degree_dims() == {-2: 1, -1: 2, 0: 2, 1: 2, 2: 1}
    assert sl3_principal.labels == [1, 1]
    assert sl3_principal.piece_elements(1) == [E12, E23]
    assert sl3_principal.verify_grading()


def test_degree_of(sl3_principal):
    assert sl3_principal.degree_of(E13) == 2
    assert sl3_principal.degree_of(E12 + E13) is None
    assert sl3_principal.degree_of(RatMatrix.zeros(3, 3)) is None
    assert sl3_principal.in_piece(E12, 1)
    with pytest.raises(InvalidParameterValue):
        sl3_principal.require_in_piece(E13, 1)


@pytest.mark.parametrize('name, labels', [('B3', [1, 0, 1]), ('C3', [0, 1, 1]), ('D4', [1, 0, 0, 1]),
                                          ('A4', [0, 1, 1, 0])])
def test_matrix_pieces_match_root_level(name, labels):
    lie_type = LieType.parse(name)
    family, size = lie_type.matrix_family()
    ga = build_classical(family, size, labels=labels)
    g = make_grading(build_root_system(lie_type), labels)
    assert ga.degree_dims() == g.degree_dims()


SMALLEST_RANK = {'A': 1, 'B': 2, 'C': 2, 'D': 4}
CLASSICAL_TYPES = [(family, rank) for family in 'ABCD' for rank in range(SMALLEST_RANK[family], 7)]


@pytest.mark.parametrize('family, rank', [
    pytest.param(family, rank, marks=pytest.mark.slow) if rank == 6 else (family, rank)
    for family, rank in CLASSICAL_TYPES
])
def test_every_01_labeling_matches_root_level(family, rank):
    lie_type = LieType(family, rank)
    rs = build_root_system(lie_type)
    matrix_family, size = lie_type.matrix_family()
    for labels in itertools.product((0, 1), repeat=rank):
        if not any(labels):
            continue
        dims = build_classical(matrix_family, size, labels=labels).degree_dims()
        assert dims == make_grading(rs, labels).degree_dims()
        assert all(dims.get(-degree) == dimension for degree, dimension in dims.items())


def test_orbit_openness(sl3_principal):
    assert orbit_is_open(sl3_principal, E12 + E23)
    assert not orbit_is_open(sl3_principal, E12)
    assert not sl3_principal.orbit_is_open(RatMatrix.zeros(3, 3))
    assert sl3_principal.orbit_dimension(E12) == 1


def test_centralizers(sl3_principal):
    principal = E12 + E23
    assert centralizer_in(sl3_principal, [principal], 0) == []
    assert len(sl3_principal.centralizer_coordinates([principal], None)) == 2
    assert len(sl3_principal.centralizer_coordinates([E12], 0)) == 1
    assert len(sl3_principal.centralizer_coordinates([], 0)) == 2


def test_generic_element_is_deterministic(sl3_principal):
    generic = generic_g1_element(sl3_principal, seed=0)
    assert generic.element == E12 + E23
    assert generic.certified
    assert generic.attempts == 1
    assert generic.orbit_dim == 2
    so7 = build_classical('so', 7, labels=[0, 1, 0])
    assert so7.generic_element(5) == so7.generic_element(5)


def test_generic_element_of_empty_piece():
    ga = build_classical('sl', 2, labels=[2])
    with pytest.raises(InvalidParameterValue):
        ga.generic_element(0, degree=1)


def test_non_dominant_zeta_has_no_labels():
    ga = build_classical('sl', 3, diagonal=[-1, 0, 1])
    assert ga.labels is None
    assert ga.degree_dims()[1] == 2


def test_invalid_zeta():
    alg = build_matrix_algebra('sl', 2)
    with pytest.raises(InvalidParameterValue):
        GradedMatrixAlgebra(alg, [Fraction(1, 4), Fraction(-1, 4)])
    with pytest.raises(InvalidParameterValue):
        GradedMatrixAlgebra(alg, [1, 1])
    with pytest.raises(InvalidParameterValue):
        build_classical('sl', 3, labels=[1, 1], diagonal=[1, 0, -1])
    with pytest.raises(UnsupportedOperation):
        build_classical('g', 2, labels=[1, 0])
