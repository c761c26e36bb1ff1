from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Final, List, Sequence, Tuple

import numpy

from models.algebra import exact_linalg
from models.algebra.lie_type import LieType
from models.algebra.rational_matrix import RatMatrix, to_rational
from models.exception.internal_inconsistency import InternalInconsistency
from models.exception.invalid_parameter_value import InvalidParameterValue
from models.exception.unsupported_operation import UnsupportedOperation
from models.utils.loggable import Loggable

Position = Tuple[int, int]
Term = Tuple[Position, Fraction]


class MatrixLieAlgebra(Loggable):
    """Classical Lie algebra ``sl_n``, ``so_n`` or ``sp_n`` as rational ``n × n`` matrices.

    ``so_n`` and ``sp_n`` preserve the anti-diagonal form ``Ω`` with ``Ω_{i, n+1−i} = w_i``, where ``w_i = 1`` for
    ``so`` and ``w_i = ±1`` (``+`` on the first half) for ``sp``. With this choice the diagonal matrices of the
    algebra form a Cartan subalgebra and the upper triangular ones a Borel subalgebra, so Dynkin labels translate
    to diagonal grading elements.

    Each basis element is ``E_ab + c·E_a'b'`` where ``(a', b')`` is the position forced by the form, or
    ``E_ii − E_{i+1,i+1}`` on the diagonal of ``sl_n``. The position ``(a, b)`` is the *lead* of the element;
    coordinates of a matrix are read from the entries at the leads.

    The stored invariant form is ``B(X, Y) = form_scale·tr(XY)``.

    :param family: ``sl``, ``so`` or ``sp``.
    :type family: str
    :param size: Matrix size ``n``.
    :type size: int
    :param form_scale: Positive multiple of the trace form used as ``B``.
    :type form_scale: Fraction

    :raises UnsupportedOperation: For any other family.
    :raises InvalidParameterValue: If the size gives no simple algebra.
    """
    _MODULE_NAME: Final[str] = 'models.algebra.matrix_lie_algebra'

    def __init__(self, family: str, size: int, form_scale: Fraction = Fraction(1)) -> None:
        super().__init__(name=f'{family}{size}')
        if family not in ('sl', 'so', 'sp'):
            raise UnsupportedOperation(module=self._MODULE_NAME, name=self.name,
                                       cause='only_sl_so_sp_have_matrix_models')
        self.lie_type: Final[LieType] = LieType.from_matrix_family(family, size)
        self.family: Final[str] = family
        self.size: Final[int] = size
        self.form_scale: Final[Fraction] = to_rational(form_scale)
        if self.form_scale <= 0:
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter='form_scale', cause='must_be_positive')

        self.form_signs: Final[Tuple[int, ...]] = self._form_signs()
        self.terms: Final[Tuple[Tuple[Term, ...], ...]] = self._build_basis_terms()
        self.leads: Final[Tuple[Position, ...]] = tuple(terms[0][0] for terms in self.terms)
        self.dimension: Final[int] = len(self.terms)
        self._check_dimension()
        self._coordinate_rows = self._build_coordinate_map()
        self.basis: Final[Tuple[RatMatrix, ...]] = tuple(self._assemble(terms) for terms in self.terms)
        self.cartan_indices: Final[Tuple[int, ...]] = tuple(
            index for index, (a, b) in enumerate(self.leads) if a == b)
        self._gram = None
        self._killing_ratio = None
        self._unit_coordinates: Dict[int, RatMatrix] = {}
        self.print(f'dimension {self.dimension}')

    def _form_signs(self) -> Tuple[int, ...]:
        if self.family == 'sp':
            half = self.size // 2
            return tuple(1 if index < half else -1 for index in range(self.size))
        return tuple(1 for _ in range(self.size))

    def _partner(self, position: Position) -> Tuple[Position, int]:
        a, b = position
        last = self.size - 1
        return (last - b, last - a), -self.form_signs[last - a] * self.form_signs[last - b]

    def _build_basis_terms(self) -> Tuple[Tuple[Term, ...], ...]:
        one = Fraction(1)
        terms: List[Tuple[Term, ...]] = []
        if self.family == 'sl':
            for a in range(self.size):
                for b in range(self.size):
                    if a != b:
                        terms.append((((a, b), one),))
                    elif a < self.size - 1:
                        terms.append((((a, a), one), ((a + 1, a + 1), -one)))
            return tuple(terms)
        used = set()
        for a in range(self.size):
            for b in range(self.size):
                if (a, b) in used:
                    continue
                partner, coefficient = self._partner((a, b))
                if partner == (a, b):
                    if coefficient == 1:
                        terms.append((((a, b), one),))
                    used.add((a, b))
                    continue
                terms.append((((a, b), one), (partner, Fraction(coefficient))))
                used.add((a, b))
                used.add(partner)
        return tuple(terms)

    def _check_dimension(self):
        n = self.size
        expected = {'sl': n * n - 1, 'so': n * (n - 1) // 2, 'sp': n * (n + 1) // 2}[self.family]
        if self.dimension != expected:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name,
                                        cause=f'dimension_{self.dimension}_expected_{expected}')

    def _build_coordinate_map(self) -> List[List[Tuple[Position, Fraction]]]:
        # S[j][k] = entry of basis element k at lead j; coordinates are S⁻¹ applied to the lead entries
        lead_index = {lead: index for index, lead in enumerate(self.leads)}
        values = [[Fraction(0)] * self.dimension for _ in range(self.dimension)]
        for k, terms in enumerate(self.terms):
            for position, coefficient in terms:
                if position in lead_index:
                    values[lead_index[position]][k] += coefficient
        inverse = exact_linalg.inverse(RatMatrix(values))
        return [[(self.leads[j], inverse[k, j]) for j in range(self.dimension) if inverse[k, j] != 0]
                for k in range(self.dimension)]

    def _assemble(self, terms: Sequence[Term]) -> RatMatrix:
        array = numpy.full((self.size, self.size), Fraction(0), dtype=object)
        for (a, b), coefficient in terms:
            array[a, b] += coefficient
        return RatMatrix._wrap(array)

    # ----------------------------------------------------------------------------------------------------------------------#

    def coordinates(self, x: RatMatrix) -> RatMatrix:
        """Coordinates of ``x`` in :attr:`basis`. ``x`` is assumed to lie in the algebra, see :meth:`contains`."""
        self._check_shape(x)
        entries = x.entries
        return RatMatrix.column([sum((coefficient * entries[position] for position, coefficient in row), Fraction(0))
                                 for row in self._coordinate_rows])

    def element(self, coordinates: RatMatrix) -> RatMatrix:
        array = numpy.full((self.size, self.size), Fraction(0), dtype=object)
        for k in range(self.dimension):
            value = coordinates[k, 0]
            if value != 0:
                for (a, b), coefficient in self.terms[k]:
                    array[a, b] += value * coefficient
        return RatMatrix._wrap(array)

    def contains(self, x: RatMatrix) -> bool:
        if x.shape != (self.size, self.size):
            return False
        return self.element(self.coordinates(x)) == x

    def _check_shape(self, x: RatMatrix):
        if x.shape != (self.size, self.size):
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter='element', cause=f'must_be_{self.size}x{self.size}')

    def require_member(self, x: RatMatrix, parameter: str = 'element'):
        self._check_shape(x)
        if not self.contains(x):
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter=parameter, cause=f'not_in_{self.name}')

    def bracket(self, x: RatMatrix, y: RatMatrix) -> RatMatrix:
        return x.bracket(y)

    def bracket_with_coordinates(self, x: RatMatrix, coordinates: RatMatrix) -> RatMatrix:
        """``[x, y]`` for ``y`` given by coordinates, using ``x·E_ab = x[:, a] in column b`` and
        ``E_ab·x = x[b, :] in row a``.
        """
        source = x.entries
        array = numpy.full((self.size, self.size), Fraction(0), dtype=object)
        for k in range(self.dimension):
            value = coordinates[k, 0]
            if value == 0:
                continue
            for (a, b), coefficient in self.terms[k]:
                weight = value * coefficient
                array[:, b] += weight * source[:, a]
                array[a, :] -= weight * source[b, :]
        return RatMatrix._wrap(array)

    def ad_matrix(self, x: RatMatrix, domain: Sequence[RatMatrix] = None) -> RatMatrix:
        """Matrix of ``ad_x`` from ``domain`` (coordinate columns, default the whole basis) to full coordinates."""
        if domain is None:
            domain = [self.unit_coordinates(k) for k in range(self.dimension)]
        if len(domain) == 0:
            return RatMatrix.zeros(self.dimension, 0)
        return RatMatrix.from_columns([self.coordinates(self.bracket_with_coordinates(x, vector))
                                       for vector in domain])

    def unit_coordinates(self, index: int) -> RatMatrix:
        if index not in self._unit_coordinates:
            values = [Fraction(0)] * self.dimension
            values[index] = Fraction(1)
            self._unit_coordinates[index] = RatMatrix.column(values)
        return self._unit_coordinates[index]

    # ----------------------------------------------------------------------------------------------------------------------#

    def form(self, x: RatMatrix, y: RatMatrix) -> Fraction:
        """``B(x, y) = form_scale·tr(xy)``."""
        return self.form_scale * x.trace_pairing(y)

    @property
    def form_gram(self) -> RatMatrix:
        if self._gram is None:
            values = [[Fraction(0)] * self.dimension for _ in range(self.dimension)]
            for k, first in enumerate(self.terms):
                for l, second in enumerate(self.terms):
                    total = Fraction(0)
                    for (a, b), c in first:
                        for (a2, b2), c2 in second:
                            if b == a2 and b2 == a:
                                total += c * c2
                    values[k][l] = total * self.form_scale
            self._gram = RatMatrix(values)
        return self._gram

    def restricted_gram(self, vectors: Sequence[RatMatrix]) -> RatMatrix:
        return exact_linalg.gram_matrix(list(vectors), self.form_gram)

    @property
    def killing_ratio(self) -> Fraction:
        """The constant ``c`` with ``Killing = c·tr`` computed from adjoint matrices (``2n`` for ``sl_n``,
        ``n − 2`` for ``so_n``, ``n + 2`` for ``sp_n``).
        """
        if self._killing_ratio is None:
            cartan_element = self.basis[self.cartan_indices[0]]
            adjoint = self.ad_matrix(cartan_element)
            self._killing_ratio = (adjoint @ adjoint).trace() / cartan_element.trace_pairing(cartan_element)
        return self._killing_ratio

    def killing(self, x: RatMatrix, y: RatMatrix) -> Fraction:
        return self.killing_ratio * x.trace_pairing(y)

    def with_form_scale(self, form_scale: Fraction) -> MatrixLieAlgebra:
        return MatrixLieAlgebra(self.family, self.size, form_scale)

    def is_nilpotent(self, x: RatMatrix) -> bool:
        return x.power(self.size).is_zero()

    def defining_form(self) -> RatMatrix:
        """The anti-diagonal ``Ω`` preserved by ``so``/``sp``."""
        if self.family == 'sl':
            raise UnsupportedOperation(module=self._MODULE_NAME, name=self.name, cause='sl_has_no_defining_form')
        array = numpy.full((self.size, self.size), Fraction(0), dtype=object)
        for index in range(self.size):
            array[index, self.size - 1 - index] = Fraction(self.form_signs[index])
        return RatMatrix._wrap(array)

    def __repr__(self) -> str:
        return f'MatrixLieAlgebra({self.name})'


@lru_cache(maxsize=None)
def build_matrix_algebra(family: str, size: int, form_scale: Fraction = Fraction(1)) -> MatrixLieAlgebra:
    return MatrixLieAlgebra(family, size, form_scale)
