"""Exact linear algebra over the rationals.

Every routine works on :class:`~models.algebra.rational_matrix.RatMatrix` values and returns exact results.
Elimination is fraction free: each row is scaled to a primitive integer vector, row operations are integer
combinations ``p·row − c·pivot_row`` and the result is divided again by the gcd of its entries. The pivot of a
column is always the first remaining row with a nonzero entry, so outputs are fully deterministic.
"""
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Final, Iterable, List, Optional, Tuple

import numpy

from models.algebra.rational_matrix import RatMatrix
from models.exception.invalid_parameter_value import InvalidParameterValue

_MODULE_NAME: Final[str] = 'models.algebra.exact_linalg'


def _lcm(first: int, second: int) -> int:
    return first * second // gcd(first, second)


def _primitive(row: numpy.ndarray) -> numpy.ndarray:
    divisor = reduce(gcd, (int(value) for value in row if value != 0), 0)
    if divisor > 1:
        return row // divisor
    return row


def _integer_rows(matrix: RatMatrix) -> numpy.ndarray:
    rows = numpy.empty(matrix.shape, dtype=object)
    for index, row in enumerate(matrix.entries):
        scale = reduce(_lcm, (value.denominator for value in row), 1)
        rows[index, :] = [value.numerator * (scale // value.denominator) for value in row]
        rows[index, :] = _primitive(rows[index, :])
    return rows


def _row_reduce(matrix: RatMatrix, reduced: bool = True) -> Tuple[numpy.ndarray, List[int]]:
    """Integer echelon form of ``matrix`` and its pivot columns.

    Rows whose entry in the current column is already zero are never touched, which keeps the sparse matrices of
    adjoint maps cheap to eliminate.
    """
    rows = _integer_rows(matrix)
    row_count, column_count = rows.shape
    pivots: List[int] = []
    current = 0
    for column in range(column_count):
        if current == row_count:
            break
        candidates = [index for index in range(current, row_count) if rows[index, column] != 0]
        if not candidates:
            continue
        first = candidates[0]
        if first != current:
            rows[[current, first]] = rows[[first, current]]
        pivot = rows[current, column]
        for index in candidates[1:]:
            rows[index] = _primitive(pivot * rows[index] - rows[index, column] * rows[current])
        pivots.append(column)
        current += 1
    if reduced:
        for position in range(len(pivots) - 1, -1, -1):
            column = pivots[position]
            pivot = rows[position, column]
            for index in range(position):
                if rows[index, column] != 0:
                    rows[index] = _primitive(pivot * rows[index] - rows[index, column] * rows[position])
    return rows[:current], pivots


def rank(matrix: RatMatrix) -> int:
    """Exact rank over the rationals.

    :param matrix: Any matrix, empty ones included.
    :type matrix: RatMatrix

    :return: The rank.
    :rtype: int
    """
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    _, pivots = _row_reduce(matrix, reduced=False)
    return len(pivots)


def kernel_basis(matrix: RatMatrix) -> List[RatMatrix]:
    """Basis of ``{x : A·x = 0}`` read off the reduced echelon form.

    There is one vector per free column ``f``; it has a ``1`` in position ``f`` and zeros in the other free
    positions, so the output is canonical.

    :param matrix: The matrix ``A``.
    :type matrix: RatMatrix

    :return: Column vectors, ``cols(A) − rank(A)`` of them.
    :rtype: List[RatMatrix]
    """
    column_count = matrix.cols
    if matrix.rows == 0:
        return [_unit_vector(column_count, index) for index in range(column_count)]
    rows, pivots = _row_reduce(matrix, reduced=True)
    pivot_set = set(pivots)
    basis: List[RatMatrix] = []
    for free in range(column_count):
        if free in pivot_set:
            continue
        values = [Fraction(0)] * column_count
        values[free] = Fraction(1)
        for position, column in enumerate(pivots):
            entry = rows[position, free]
            if entry != 0:
                values[column] = -Fraction(entry, rows[position, column])
        basis.append(RatMatrix.column(values))
    return basis


def _unit_vector(size: int, index: int) -> RatMatrix:
    values = [Fraction(0)] * size
    values[index] = Fraction(1)
    return RatMatrix.column(values)


def solve_linear(matrix: RatMatrix, rhs: RatMatrix) -> Optional[RatMatrix]:
    """Finds one ``x`` with ``A·x = b`` exactly.

    Free variables are set to zero, so the answer is the same on every call.

    :param matrix: Coefficient matrix ``A`` with ``r`` rows.
    :type matrix: RatMatrix
    :param rhs: Column ``b`` with ``r`` rows.
    :type rhs: RatMatrix

    :raises InvalidParameterValue: If ``b`` is not a column with as many rows as ``A``.

    :return: A solution, or ``None`` when the system is inconsistent.
    :rtype: Optional[RatMatrix]
    """
    if rhs.cols != 1 or rhs.rows != matrix.rows:
        raise InvalidParameterValue(module=_MODULE_NAME, name='solve_linear',
                                    parameter='rhs', cause='dimension_mismatch')
    column_count = matrix.cols
    if matrix.rows == 0:
        return RatMatrix.zeros(column_count, 1)
    rows, pivots = _row_reduce(RatMatrix.hstack([matrix, rhs]), reduced=True)
    if pivots and pivots[-1] == column_count:
        return None
    values = [Fraction(0)] * column_count
    for position, column in enumerate(pivots):
        values[column] = Fraction(rows[position, column_count], rows[position, column])
    return RatMatrix.column(values)


def inverse(matrix: RatMatrix) -> RatMatrix:
    """Exact inverse of a square nonsingular matrix.

    :raises InvalidParameterValue: If the matrix is not square or is singular.
    """
    if not matrix.is_square():
        raise InvalidParameterValue(module=_MODULE_NAME, name='inverse', parameter='matrix', cause='must_be_square')
    size = matrix.rows
    if size == 0:
        return RatMatrix.zeros(0, 0)
    rows, pivots = _row_reduce(RatMatrix.hstack([matrix, RatMatrix.identity(size)]), reduced=True)
    if pivots[:size] != list(range(size)):
        raise InvalidParameterValue(module=_MODULE_NAME, name='inverse', parameter='matrix', cause='singular')
    return RatMatrix([[Fraction(rows[index, size + column], rows[index, index]) for column in range(size)]
                      for index in range(size)])


def determinant(matrix: RatMatrix) -> Fraction:
    """Bareiss fraction free determinant.

    :raises InvalidParameterValue: If the matrix is not square.
    """
    if not matrix.is_square():
        raise InvalidParameterValue(module=_MODULE_NAME, name='determinant',
                                    parameter='matrix', cause='must_be_square')
    size = matrix.rows
    if size == 0:
        return Fraction(1)
    scale = reduce(_lcm, (value.denominator for value in matrix.flatten()), 1)
    work = [[int(value * scale) for value in row] for row in matrix.to_rows()]
    sign = 1
    previous = 1
    for step in range(size - 1):
        if work[step][step] == 0:
            swap = next((index for index in range(step + 1, size) if work[index][step] != 0), None)
            if swap is None:
                return Fraction(0)
            work[step], work[swap] = work[swap], work[step]
            sign = -sign
        pivot = work[step][step]
        for row in range(step + 1, size):
            for column in range(step + 1, size):
                work[row][column] = (work[row][column] * pivot - work[row][step] * work[step][column]) // previous
        previous = pivot
    return Fraction(sign * work[size - 1][size - 1], scale ** size)


def form_nondegenerate(gram: RatMatrix) -> bool:
    """True iff the Gram matrix of a bilinear form has nonzero determinant. The empty form counts as
    nondegenerate.

    :raises InvalidParameterValue: If ``gram`` is not square.
    """
    if not gram.is_square():
        raise InvalidParameterValue(module=_MODULE_NAME, name='form_nondegenerate',
                                    parameter='gram', cause='must_be_square')
    return determinant(gram) != 0


def rational_spectrum(matrix: RatMatrix, candidates: Iterable[Fraction]) -> Tuple[Dict[Fraction, int], bool]:
    """Geometric multiplicities of the candidate eigenvalues that occur.

    :param matrix: Square matrix.
    :type matrix: RatMatrix
    :param candidates: Rationals to test.
    :type candidates: Iterable[Fraction]

    :return: The eigenvalue to multiplicity map and whether the multiplicities fill the whole space, i.e. whether
        the matrix is diagonalizable with all its eigenvalues among the candidates.
    :rtype: Tuple[Dict[Fraction, int], bool]
    """
    if not matrix.is_square():
        raise InvalidParameterValue(module=_MODULE_NAME, name='rational_spectrum',
                                    parameter='matrix', cause='must_be_square')
    size = matrix.rows
    spectrum: Dict[Fraction, int] = {}
    for candidate in sorted(set(Fraction(value) for value in candidates)):
        multiplicity = size - rank(matrix - RatMatrix.identity(size) * candidate)
        if multiplicity > 0:
            spectrum[candidate] = multiplicity
    return spectrum, sum(spectrum.values()) == size


def eigenspace(matrix: RatMatrix, eigenvalue: Fraction) -> List[RatMatrix]:
    """Kernel basis of ``A − λ·I``."""
    return kernel_basis(matrix - RatMatrix.identity(matrix.rows) * eigenvalue)


def gram_matrix(vectors: List[RatMatrix], form: RatMatrix) -> RatMatrix:
    """``G_ij = v_iᵀ·F·v_j`` for column vectors ``v_i``."""
    if not vectors:
        return RatMatrix.zeros(0, 0)
    basis = RatMatrix.from_columns(vectors)
    return basis.transpose() @ form @ basis


def in_span(vectors: List[RatMatrix], target: RatMatrix) -> bool:
    if not vectors:
        return target.is_zero()
    return solve_linear(RatMatrix.from_columns(vectors), target) is not None
