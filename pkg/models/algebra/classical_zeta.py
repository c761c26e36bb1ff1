"""Diagonal grading elements of the classical matrix algebras and their Dynkin labels.

For ``sl_n`` the labels are ``p_i = z_i − z_{i+1}`` with trace zero. For ``so``/``sp`` the diagonal is
``(z_1, ..., z_m, [0], −z_m, ..., −z_1)`` and the last labels depend on the type:
``B_m: p_m = z_m``, ``C_m: p_m = 2z_m``, ``D_m: p_{m−1} = z_{m−1} − z_m, p_m = z_{m−1} + z_m``.
"""
from fractions import Fraction
from typing import Final, List, Sequence

from models.algebra.lie_type import LieType
from models.algebra.rational_matrix import to_rational
from models.exception.invalid_parameter_value import InvalidParameterValue

_MODULE_NAME: Final[str] = 'models.algebra.classical_zeta'


def diagonal_from_labels(family: str, size: int, labels: Sequence[int]) -> List[Fraction]:
    lie_type = LieType.from_matrix_family(family, size)
    rank = lie_type.rank
    if len(labels) != rank:
        raise InvalidParameterValue(module=_MODULE_NAME, name=f'{family}{size}',
                                    parameter='labels', cause=f'must_have_{rank}_entries')
    p = [Fraction(label) for label in labels]
    if lie_type.family == 'A':
        tail = [Fraction(0)] * size
        for index in range(size - 2, -1, -1):
            tail[index] = tail[index + 1] + p[index]
        shift = sum(tail, Fraction(0)) / size
        return [value - shift for value in tail]
    m = rank
    z = [Fraction(0)] * m
    if lie_type.family == 'B':
        z[m - 1] = p[m - 1]
    elif lie_type.family == 'C':
        z[m - 1] = p[m - 1] / 2
    else:
        z[m - 2] = (p[m - 2] + p[m - 1]) / 2
        z[m - 1] = (p[m - 1] - p[m - 2]) / 2
    last_chain = m - 2 if lie_type.family == 'D' else m - 1
    for index in range(last_chain - 1, -1, -1):
        z[index] = z[index + 1] + p[index]
    middle = [Fraction(0)] if size % 2 == 1 else []
    return z + middle + [-value for value in reversed(z)]


def labels_from_diagonal(family: str, size: int, diagonal: Sequence) -> List[int]:
    """Dynkin labels of a dominant diagonal grading element.

    :raises InvalidParameterValue: If the diagonal is not in the algebra or not dominant (a negative or
        non integral label).
    """
    lie_type = LieType.from_matrix_family(family, size)
    z = [to_rational(value) for value in diagonal]
    name = f'{family}{size}'
    if len(z) != size:
        raise InvalidParameterValue(module=_MODULE_NAME, name=name, parameter='diagonal',
                                    cause=f'must_have_{size}_entries')
    if lie_type.family == 'A':
        if sum(z, Fraction(0)) != 0:
            raise InvalidParameterValue(module=_MODULE_NAME, name=name, parameter='diagonal',
                                        cause='must_have_trace_zero')
        labels = [z[index] - z[index + 1] for index in range(size - 1)]
    else:
        if any(z[index] != -z[size - 1 - index] for index in range(size)):
            raise InvalidParameterValue(module=_MODULE_NAME, name=name, parameter='diagonal',
                                        cause='must_be_antisymmetric_about_the_center')
        m = lie_type.rank
        labels = [z[index] - z[index + 1] for index in range(m - 1)]
        if lie_type.family == 'B':
            labels.append(z[m - 1])
        elif lie_type.family == 'C':
            labels.append(2 * z[m - 1])
        else:
            labels.append(z[m - 2] + z[m - 1])
    for label in labels:
        if label < 0 or label.denominator != 1:
            raise InvalidParameterValue(module=_MODULE_NAME, name=name, parameter='diagonal',
                                        cause='must_be_dominant_with_integral_labels')
    return [int(label) for label in labels]


def block_diagonal(blocks: Sequence) -> List[Fraction]:
    """Expands ``[(value, multiplicity), ...]`` into a diagonal."""
    diagonal: List[Fraction] = []
    for value, multiplicity in blocks:
        diagonal.extend([to_rational(value)] * int(multiplicity))
    return diagonal
