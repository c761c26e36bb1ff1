import itertools
from fractions import Fraction

import numpy
import pytest

from models.algebra import exact_linalg
from models.algebra.rational_matrix import RatMatrix
from models.exception.invalid_parameter_value import InvalidParameterValue


def test_rank_of_dependent_rows():
    assert exact_linalg.rank(RatMatrix([[1, 2], [2, 4]])) == 1
    assert exact_linalg.rank(RatMatrix([['1/2', 1], [1, 3]])) == 2
    assert exact_linalg.rank(RatMatrix.zeros(0, 4)) == 0


def test_kernel_basis_is_canonical():
    kernel = exact_linalg.kernel_basis(RatMatrix([[1, 2], [2, 4]]))
    assert kernel == [RatMatrix.column([-2, 1])]
    assert exact_linalg.kernel_basis(RatMatrix.identity(3)) == []


def test_kernel_vectors_are_annihilated():
    matrix = RatMatrix([[1, 1, 0, 2], [0, '1/3', 1, 1]])
    kernel = exact_linalg.kernel_basis(matrix)
    assert len(kernel) == 2
    for vector in kernel:
        assert (matrix @ vector).is_zero()


def test_solve_linear():
    matrix = RatMatrix([[2, 1], [1, 1]])
    solution = exact_linalg.solve_linear(matrix, RatMatrix.column([3, 2]))
    assert solution == RatMatrix.column([1, 1])
    assert exact_linalg.solve_linear(RatMatrix([[1, 1], [1, 1]]), RatMatrix.column([1, 2])) is None
    with pytest.raises(InvalidParameterValue):
        exact_linalg.solve_linear(matrix, RatMatrix.column([1, 2, 3]))


def test_inverse():
    assert exact_linalg.inverse(RatMatrix([[2, 1], [1, 1]])) == RatMatrix([[1, -1], [-1, 2]])
    with pytest.raises(InvalidParameterValue):
        exact_linalg.inverse(RatMatrix([[1, 2], [2, 4]]))


@pytest.mark.parametrize('rows, expected', [
    ([[1, 2], [3, 4]], Fraction(-2)),
    ([['1/2', 1], [1, 3]], Fraction(1, 2)),
    ([[0, 1], [1, 0]], Fraction(-1)),
    ([[1, 2], [2, 4]], Fraction(0)),
    ([[2, 0, 0], [0, 3, 0], [0, 0, '1/6']], Fraction(1)),
])
def test_determinant(rows, expected):
    assert exact_linalg.determinant(RatMatrix(rows)) == expected


def test_empty_form_counts_as_nondegenerate():
    assert exact_linalg.form_nondegenerate(RatMatrix.zeros(0, 0))
    assert not exact_linalg.form_nondegenerate(RatMatrix([[0, 0], [0, 1]]))


def test_rational_spectrum():
    spectrum, complete = exact_linalg.rational_spectrum(RatMatrix.diagonal([1, 1, 2]), [0, 1, 2])
    assert spectrum == {Fraction(1): 2, Fraction(2): 1}
    assert complete
    _, complete = exact_linalg.rational_spectrum(RatMatrix([[0, 1], [0, 0]]), [0])
    assert not complete


def test_in_span():
    vectors = [RatMatrix.column([1, 0, 1]), RatMatrix.column([0, 1, 1])]
    assert exact_linalg.in_span(vectors, RatMatrix.column([2, 3, 5]))
    assert not exact_linalg.in_span(vectors, RatMatrix.column([0, 0, 1]))
    assert exact_linalg.in_span([], RatMatrix.zeros(3, 1))


def _random_matrix(generator, rows, cols):
    # roughly a third of the entries are zero
    return RatMatrix([[Fraction(int(generator.integers(-3, 4)) if generator.random() > 0.33 else 0,
                                int(generator.integers(1, 4)))
                       for _ in range(cols)] for _ in range(rows)])


def _leibniz_determinant(matrix):
    size = matrix.rows
    total = Fraction(0)
    for permutation in itertools.permutations(range(size)):
        inversions = sum(1 for i, j in itertools.combinations(range(size), 2) if permutation[i] > permutation[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for row, col in enumerate(permutation):
            term *= matrix[row, col]
        total += term
    return total


def test_seeded_random_instances():
    generator = numpy.random.default_rng(2024)
    for _ in range(120):
        rows, cols = int(generator.integers(1, 5)), int(generator.integers(1, 5))
        matrix = _random_matrix(generator, rows, cols)
        rank = exact_linalg.rank(matrix)
        kernel = exact_linalg.kernel_basis(matrix)
        assert rank + len(kernel) == cols
        for vector in kernel:
            assert (matrix @ vector).is_zero()

        x = RatMatrix.column([Fraction(int(generator.integers(-4, 5))) for _ in range(cols)])
        rhs = matrix @ x
        solution = exact_linalg.solve_linear(matrix, rhs)
        assert solution is not None
        assert matrix @ solution == rhs

        square = _random_matrix(generator, rows, rows)
        determinant = exact_linalg.determinant(square)
        assert determinant == _leibniz_determinant(square)
        assert (determinant != 0) == (exact_linalg.rank(square) == rows)
