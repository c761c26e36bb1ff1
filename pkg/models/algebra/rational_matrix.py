from __future__ import annotations

from fractions import Fraction
from typing import Final, List, Sequence, Tuple, Union

import numpy

from models.exception.invalid_parameter_value import InvalidParameterValue
from models.exception.non_compatible_data import NonCompatibleData

Rational = Fraction
Scalar = Union[int, Fraction, str]


def to_rational(value: Scalar) -> Fraction:
    """Converts ints, ``Fraction`` values and ``"num/den"`` strings to ``Fraction``. Floats are refused since
    every quantity handled here must stay exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidParameterValue(module=RatMatrix._MODULE_NAME, name='to_rational',
                                    parameter='value', cause='must_be_exact')
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, numpy.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise InvalidParameterValue(module=RatMatrix._MODULE_NAME, name='to_rational',
                                        parameter='value', cause='must_be_rational_literal')
    raise InvalidParameterValue(module=RatMatrix._MODULE_NAME, name='to_rational',
                                parameter='value', cause='must_be_int_fraction_or_str')


def format_rational(value: Fraction) -> str:
    """Canonical text form ``num/den`` (always with a denominator) used by the reports."""
    value = Fraction(value)
    return f'{value.numerator}/{value.denominator}'


class RatMatrix:
    """Immutable dense matrix of exact rationals.

    Entries live in a read-only ``numpy`` array of ``object`` dtype holding ``fractions.Fraction`` values, so the
    usual ``numpy`` slicing and products apply while every operation stays exact. Column vectors are matrices with
    a single column.

    :param entries: Anything ``numpy`` can turn into a two dimensional array of exact scalars.
    :type entries: Sequence[Sequence[int | Fraction | str]] | numpy.ndarray

    :raises InvalidParameterValue: If the entries are not two dimensional or contain a float.
    """
    _MODULE_NAME: Final[str] = 'models.algebra.rational_matrix'

    __slots__ = ('_entries', '_hash')

    def __init__(self, entries) -> None:
        array = numpy.array(entries, dtype=object)
        if array.ndim != 2:
            raise InvalidParameterValue(module=self._MODULE_NAME, name='matrix',
                                        parameter='entries', cause='must_be_two_dimensional')
        converted = numpy.empty(array.shape, dtype=object)
        for index, value in numpy.ndenumerate(array):
            converted[index] = to_rational(value)
        converted.flags.writeable = False
        self._entries = converted
        self._hash = None

    @classmethod
    def _wrap(cls, array: numpy.ndarray) -> RatMatrix:
        # trusted fast path: array already holds Fraction values
        matrix = cls.__new__(cls)
        array = numpy.array(array, dtype=object)
        array.flags.writeable = False
        matrix._entries = array
        matrix._hash = None
        return matrix

    # ----------------------------------------------------------------------------------------------------------------------#

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls._wrap(numpy.full((rows, cols), Fraction(0), dtype=object))

    @classmethod
    def identity(cls, size: int) -> RatMatrix:
        array = numpy.full((size, size), Fraction(0), dtype=object)
        for index in range(size):
            array[index, index] = Fraction(1)
        return cls._wrap(array)

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> RatMatrix:
        array = numpy.full((len(values), len(values)), Fraction(0), dtype=object)
        for index, value in enumerate(values):
            array[index, index] = to_rational(value)
        return cls._wrap(array)

    @classmethod
    def column(cls, values: Sequence[Scalar]) -> RatMatrix:
        array = numpy.full((len(values), 1), Fraction(0), dtype=object)
        for index, value in enumerate(values):
            array[index, 0] = to_rational(value)
        return cls._wrap(array)

    @classmethod
    def unit(cls, size: int, row: int, col: int) -> RatMatrix:
        """Elementary matrix ``E_{row,col}`` (zero based indices)."""
        array = numpy.full((size, size), Fraction(0), dtype=object)
        array[row, col] = Fraction(1)
        return cls._wrap(array)

    @classmethod
    def from_columns(cls, columns: Sequence[RatMatrix], rows: int = None) -> RatMatrix:
        if len(columns) == 0:
            if rows is None:
                raise NonCompatibleData(module=cls._MODULE_NAME, name='from_columns', cause='row_count_unknown')
            return cls.zeros(rows, 0)
        for column in columns:
            if column.cols != 1 or column.rows != columns[0].rows:
                raise NonCompatibleData(module=cls._MODULE_NAME, name='from_columns', cause='column_shape_mismatch')
        return cls._wrap(numpy.hstack([column.entries for column in columns]))

    @classmethod
    def vstack(cls, blocks: Sequence[RatMatrix]) -> RatMatrix:
        if any(block.cols != blocks[0].cols for block in blocks):
            raise NonCompatibleData(module=cls._MODULE_NAME, name='vstack', cause='column_count_mismatch')
        return cls._wrap(numpy.vstack([block.entries for block in blocks]))

    @classmethod
    def hstack(cls, blocks: Sequence[RatMatrix]) -> RatMatrix:
        if any(block.rows != blocks[0].rows for block in blocks):
            raise NonCompatibleData(module=cls._MODULE_NAME, name='hstack', cause='row_count_mismatch')
        return cls._wrap(numpy.hstack([block.entries for block in blocks]))

    # ----------------------------------------------------------------------------------------------------------------------#

    @property
    def entries(self) -> numpy.ndarray:
        return self._entries

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._entries.shape

    def __getitem__(self, index) -> Fraction:
        return self._entries[index]

    def to_rows(self) -> List[List[Fraction]]:
        return [list(row) for row in self._entries]

    def flatten(self) -> List[Fraction]:
        return list(self._entries.reshape(-1))

    def column_at(self, index: int) -> RatMatrix:
        return RatMatrix._wrap(self._entries[:, index:index + 1])

    def columns(self) -> List[RatMatrix]:
        return [self.column_at(index) for index in range(self.cols)]

    def select_rows(self, indices: Sequence[int]) -> RatMatrix:
        return RatMatrix._wrap(self._entries[list(indices), :].reshape(len(indices), self.cols))

    def diagonal_entries(self) -> List[Fraction]:
        return [self._entries[index, index] for index in range(min(self.shape))]

    # ----------------------------------------------------------------------------------------------------------------------#

    def _check_same_shape(self, other: RatMatrix, operation: str):
        if self.shape != other.shape:
            raise NonCompatibleData(module=self._MODULE_NAME, name=operation,
                                    cause=f'shape_{self.rows}x{self.cols}_vs_{other.rows}x{other.cols}')

    def __add__(self, other: RatMatrix) -> RatMatrix:
        self._check_same_shape(other, 'add')
        return RatMatrix._wrap(self._entries + other._entries)

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        self._check_same_shape(other, 'sub')
        return RatMatrix._wrap(self._entries - other._entries)

    def __neg__(self) -> RatMatrix:
        return RatMatrix._wrap(-self._entries)

    def __mul__(self, scalar: Scalar) -> RatMatrix:
        if isinstance(scalar, RatMatrix):
            raise NonCompatibleData(module=self._MODULE_NAME, name='mul', cause='use_matmul_for_matrix_product')
        return RatMatrix._wrap(self._entries * to_rational(scalar))

    __rmul__ = __mul__

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise NonCompatibleData(module=self._MODULE_NAME, name='matmul',
                                    cause=f'shape_{self.rows}x{self.cols}_vs_{other.rows}x{other.cols}')
        if self.cols == 0:
            return RatMatrix.zeros(self.rows, other.cols)
        return RatMatrix._wrap(self._entries @ other._entries)

    def bracket(self, other: RatMatrix) -> RatMatrix:
        """Commutator ``[self, other] = self·other − other·self``."""
        return self @ other - other @ self

    def power(self, exponent: int) -> RatMatrix:
        if not self.is_square():
            raise NonCompatibleData(module=self._MODULE_NAME, name='power', cause='must_be_square')
        result = RatMatrix.identity(self.rows)
        for _ in range(exponent):
            result = result @ self
        return result

    def transpose(self) -> RatMatrix:
        return RatMatrix._wrap(self._entries.T)

    def trace(self) -> Fraction:
        if not self.is_square():
            raise NonCompatibleData(module=self._MODULE_NAME, name='trace', cause='must_be_square')
        return sum(self.diagonal_entries(), Fraction(0))

    def trace_pairing(self, other: RatMatrix) -> Fraction:
        """``tr(self·other)`` without forming the product."""
        if self.shape != other.transpose().shape:
            raise NonCompatibleData(module=self._MODULE_NAME, name='trace_pairing', cause='shape_mismatch')
        return sum((self._entries * other._entries.T).reshape(-1), Fraction(0))

    def dot(self, other: RatMatrix) -> Fraction:
        """Entrywise pairing ``Σ a_ij b_ij`` (``tr(selfᵀ·other)``)."""
        self._check_same_shape(other, 'dot')
        return sum((self._entries * other._entries).reshape(-1), Fraction(0))

    # ----------------------------------------------------------------------------------------------------------------------#

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(value != 0 for value in self._entries.reshape(-1))

    def is_diagonal(self) -> bool:
        if not self.is_square():
            return False
        return all(self._entries[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and bool((self._entries == other._entries).all())

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, tuple(self.flatten())))
        return self._hash

    def __repr__(self) -> str:
        body = '; '.join(' '.join(str(value) for value in row) for row in self._entries)
        return f'RatMatrix[{self.rows}x{self.cols}]({body})'
