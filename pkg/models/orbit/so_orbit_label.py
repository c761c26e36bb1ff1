from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Final, List, Tuple

import numpy

from models.algebra.classical_zeta import block_diagonal
from models.algebra.graded_matrix_algebra import GradedMatrixAlgebra, build_classical
from models.algebra.rational_matrix import RatMatrix
from models.exception.invalid_parameter_value import InvalidParameterValue

_MODULE_NAME: Final[str] = 'models.orbit.so_orbit_label'


@dataclass(frozen=True, order=True)
class SOOrbitLabel:
    """``GL_p × SO_q``-orbit in ``Hom(ℂ^p, ℂ^q)``: the image of a map is the sum of a nondegenerate subspace of
    dimension ``r1`` and a totally isotropic subspace of dimension ``r2``.
    """
    p: int
    q: int
    r1: int
    r2: int

    def __post_init__(self):
        name = f'p{self.p}q{self.q}r{self.r1}_{self.r2}'
        for field, value in (('p', self.p), ('q', self.q), ('r1', self.r1), ('r2', self.r2)):
            if type(value) is not int or value < 0:
                raise InvalidParameterValue(module=_MODULE_NAME, name=name, parameter=field,
                                            cause='must_be_nonnegative_int')
        if self.p < 1 or self.q < 1 or 2 * self.p + self.q < 4:
            raise InvalidParameterValue(module=_MODULE_NAME, name=name, parameter='p_q',
                                        cause='so_2p_plus_q_must_be_simple_or_so4')
        if self.r1 + self.r2 > min(self.p, self.q):
            raise InvalidParameterValue(module=_MODULE_NAME, name=name, parameter='r1_r2',
                                        cause='rank_exceeds_min_p_q')
        if self.r1 + 2 * self.r2 > self.q:
            raise InvalidParameterValue(module=_MODULE_NAME, name=name, parameter='r1_r2',
                                        cause='image_does_not_fit_in_q')

    @property
    def size(self) -> int:
        return 2 * self.p + self.q

    @property
    def toledo_rank(self) -> int:
        return 2 * self.r1 + self.r2

    @property
    def is_open(self) -> bool:
        """The open orbit: maximal rank with nondegenerate image."""
        return self.r1 == min(self.p, self.q) and self.r2 == 0

    def dominated_by(self, other: SOOrbitLabel) -> bool:
        return (self.p, self.q) == (other.p, other.q) and self.r1 <= other.r1 and self.r2 <= other.r2

    def __str__(self) -> str:
        return f'(p={self.p}, q={self.q}, r1={self.r1}, r2={self.r2})'


def all_labels(p: int, q: int) -> List[SOOrbitLabel]:
    return [SOOrbitLabel(p, q, r1, r2)
            for r1 in range(min(p, q) + 1) for r2 in range(min(p, q) + 1)
            if r1 + r2 <= min(p, q) and r1 + 2 * r2 <= q]


def so_grading(p: int, q: int) -> GradedMatrixAlgebra:
    """``so_{2p+q}`` graded by ``ζ = diag(Id_p, 0_q, −Id_p)``, so that ``𝔤_1 = Hom(ℂ^p, ℂ^q)``."""
    return build_classical('so', 2 * p + q, diagonal=block_diagonal([(1, p), (0, q), (-1, p)]))


def middle_vectors(label: SOOrbitLabel) -> List[List[Tuple[int, int]]]:
    """Images of the columns of ``u`` in ``ℂ^q`` as ``[(index, coefficient), ...]``.

    ``ℂ^q`` carries ``⟨w_i, w_{q−1−i}⟩ = 1``. The first ``r2`` columns go to the isotropic ``w_0, ..., w_{r2−1}``.
    The next ``r1`` columns go to pairwise orthogonal non isotropic vectors of the middle space spanned by
    ``w_{r2}, ..., w_{q−1−r2}``: first the ``w_a + w_{a'}`` with ``a' = q−1−a``, then ``w_c`` for the centre ``c`` when
    the middle space has odd dimension, then the ``w_a − w_{a'}``.
    """
    q, r1, r2 = label.q, label.r1, label.r2
    columns: List[List[Tuple[int, int]]] = [[(index, 1)] for index in range(r2)]
    middle = q - 2 * r2
    half = middle // 2
    candidates: List[List[Tuple[int, int]]] = []
    for k in range(half):
        candidates.append([(r2 + k, 1), (q - 1 - r2 - k, 1)])
    if middle % 2 == 1:
        candidates.append([(r2 + half, 1)])
    for k in range(half):
        candidates.append([(r2 + k, 1), (q - 1 - r2 - k, -1)])
    columns.extend(candidates[:r1])
    return columns


def u_matrix(label: SOOrbitLabel) -> RatMatrix:
    """Normal form ``u`` (``q × p``) of the orbit."""
    array = numpy.full((label.q, label.p), Fraction(0), dtype=object)
    for column, entries in enumerate(middle_vectors(label)):
        for index, coefficient in entries:
            array[index, column] = Fraction(coefficient)
    return RatMatrix._wrap(array)


def so_orbit_representative(label: SOOrbitLabel) -> RatMatrix:
    """Element ``e ∈ 𝔤_1`` of ``so_{2p+q}``: ``u`` sits in the (middle, last) block and the (first, middle) block is
    forced by ``eᵀΩ + Ωe = 0``, i.e. ``e_{N−1−b, N−1−a} = −e_{a, b}``.
    """
    size = label.size
    u = u_matrix(label)
    array = numpy.full((size, size), Fraction(0), dtype=object)
    for i in range(label.q):
        for j in range(label.p):
            value = u[i, j]
            if value != 0:
                a, b = label.p + i, label.p + label.q + j
                array[a, b] = value
                array[size - 1 - b, size - 1 - a] = -value
    return RatMatrix._wrap(array)


def expected_h(label: SOOrbitLabel) -> RatMatrix:
    """``diag(0, 2Id_{r1}, Id_{r2} | Id_{r2}, 0, −Id_{r2} | −Id_{r2}, −2Id_{r1}, 0)``."""
    p, q, r1, r2 = label.p, label.q, label.r1, label.r2
    first = block_diagonal([(0, p - r1 - r2), (2, r1), (1, r2)])
    middle = block_diagonal([(1, r2), (0, q - 2 * r2), (-1, r2)])
    return RatMatrix.diagonal(first + middle + [-value for value in reversed(first)])
