from __future__ import annotations

from dataclasses import dataclass
from typing import Final, List, Optional

from models.algebra import exact_linalg
from models.algebra.classical_zeta import labels_from_diagonal
from models.algebra.graded_matrix_algebra import GradedMatrixAlgebra, build_classical
from models.algebra.matrix_lie_algebra import build_matrix_algebra
from models.algebra.rational_matrix import RatMatrix
from models.algebra.sl2_triple import Sl2Triple, jm_complete
from models.exception.invalid_parameter_value import InvalidParameterValue
from models.orbit.partition import Partition, h_eigenvalues, is_even_orbit, partition_valid

_MODULE_NAME: Final[str] = 'models.orbit.nilpotent_representative'


@dataclass(frozen=True)
class NilpotentRepresentative:
    """A nilpotent of a given Jordan type together with the grading it was built in.

    ``matches`` says whether the completed triple has the ``h``-spectrum of the partition; it is ``False`` when no
    element of the requested type was found (which happens exactly for partitions that are not orbits of the
    family, provided ``certified`` is ``True``).
    """
    family: str
    size: int
    partition: Partition
    ga: GradedMatrixAlgebra
    degree: int
    triple: Sl2Triple
    certified: bool
    matches: bool

    @property
    def e(self) -> RatMatrix:
        return self.triple.e


def h_spectrum(h: RatMatrix) -> List[int]:
    """Eigenvalues of a semisimple ``h`` with integer spectrum, sorted decreasingly with multiplicity."""
    size = h.rows
    spectrum, complete = exact_linalg.rational_spectrum(h, range(-(size - 1), size))
    if not complete:
        raise InvalidParameterValue(module=_MODULE_NAME, name='h_spectrum', parameter='h',
                                    cause='must_be_diagonalizable_with_integer_eigenvalues')
    values: List[int] = []
    for value, multiplicity in spectrum.items():
        values.extend([int(value)] * multiplicity)
    return sorted(values, reverse=True)


def jordan_representative_sl(size: int, partition: Partition) -> RatMatrix:
    """``Σ E_{i,i+1}`` inside each Jordan block, blocks placed along the diagonal."""
    if partition.total != size:
        raise InvalidParameterValue(module=_MODULE_NAME, name=f'sl{size}', parameter='partition',
                                    cause=f'total_must_be_{size}')
    entries = [[0] * size for _ in range(size)]
    start = 0
    for part in partition.parts:
        for offset in range(part - 1):
            entries[start + offset][start + offset + 1] = 1
        start += part
    return RatMatrix(entries)


def dominant_h_diagonal(partition: Partition) -> List[int]:
    return h_eigenvalues(partition)


def nilpotent_representative(family: str, size: int, partition: Partition, seed: int = 0) \
        -> NilpotentRepresentative:
    """Representative of the nilpotent orbit with Jordan type ``partition``.

    ``sl``: the Jordan matrix, in the principal grading (it lies in ``𝔤_1``). ``so``/``sp``: ``ζ`` is the dominant
    diagonal with the ``h``-eigenvalues of the partition and ``e`` is a generic element of ``𝔤_2``.
    """
    if partition.total != size:
        raise InvalidParameterValue(module=_MODULE_NAME, name=f'{family}{size}', parameter='partition',
                                    cause=f'total_must_be_{size}')
    expected = h_eigenvalues(partition)
    if family == 'sl':
        ga = build_classical('sl', size, labels=[1] * (size - 1))
        e = jordan_representative_sl(size, partition)
        degree, certified = 1, True
    else:
        ga = GradedMatrixAlgebra(build_matrix_algebra(family, size), dominant_h_diagonal(partition))
        degree = 2
        if ga.dim(2) == 0:
            e, certified = RatMatrix.zeros(size, size), True
        else:
            generic = ga.generic_element(seed, degree=2)
            e, certified = generic.element, generic.certified
    if e.is_zero():
        triple = Sl2Triple.zero(size, degree)
    else:
        triple = jm_complete(ga, e, degree)
    matches = h_spectrum(triple.h) == expected
    return NilpotentRepresentative(family=family, size=size, partition=partition, ga=ga, degree=degree,
                                   triple=triple, certified=certified, matches=matches)


def orbit_is_constructible(family: str, size: int, partition: Partition, seed: int = 0) -> bool:
    """Constructive check of :func:`partition_valid`: an element with this Jordan type exists in the algebra."""
    representative = nilpotent_representative(family, size, partition, seed)
    return representative.certified and representative.matches


def weighted_dynkin_labels(family: str, size: int, partition: Partition) -> List[int]:
    """``α_i(h)`` for the dominant ``h`` of the orbit."""
    if not partition_valid(family, size, partition):
        raise InvalidParameterValue(module=_MODULE_NAME, name=f'{family}{size}', parameter='partition',
                                    cause='not_a_nilpotent_orbit_of_family')
    return labels_from_diagonal(family, size, dominant_h_diagonal(partition))


def even_jm_grading_labels(family: str, size: int, partition: Partition) -> Optional[List[int]]:
    """Labels of the canonical grading of the even Jacobson–Morozov parabolic (weighted labels halved), ``None`` for
    orbits that are not even.
    """
    labels = weighted_dynkin_labels(family, size, partition)
    if not is_even_orbit(partition) or any(label % 2 for label in labels):
        return None
    return [label // 2 for label in labels]


def triple_centralizer_dim(family: str, size: int, partition: Partition, seed: int = 0) -> int:
    """Dimension of the centralizer of a full triple of the orbit in the whole algebra; zero iff distinguished."""
    representative = nilpotent_representative(family, size, partition, seed)
    if not (representative.certified and representative.matches):
        raise InvalidParameterValue(module=_MODULE_NAME, name=f'{family}{size}', parameter='partition',
                                    cause='not_a_nilpotent_orbit_of_family')
    triple = representative.triple
    return len(representative.ga.centralizer_coordinates([triple.e, triple.h, triple.f], degree=None))

