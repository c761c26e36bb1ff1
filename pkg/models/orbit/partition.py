from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Final, List, Sequence, Tuple

from models.exception.invalid_parameter_value import InvalidParameterValue

_MODULE_NAME: Final[str] = 'models.orbit.partition'


@dataclass(frozen=True)
class Partition:
    """Jordan type of a nilpotent matrix: weakly decreasing positive parts."""
    parts: Tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) == 0:
            raise InvalidParameterValue(module=_MODULE_NAME, name='partition', parameter='parts',
                                        cause='must_not_be_empty')
        for part in self.parts:
            if isinstance(part, bool) or type(part) is not int or part < 1:
                raise InvalidParameterValue(module=_MODULE_NAME, name='partition', parameter='parts',
                                            cause='must_be_positive_integers')
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise InvalidParameterValue(module=_MODULE_NAME, name='partition', parameter='parts',
                                        cause='must_be_weakly_decreasing')

    @classmethod
    def of(cls, parts: Sequence[int]) -> Partition:
        """Sorts the parts before building the partition."""
        return cls(tuple(sorted((int(part) for part in parts), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> Partition:
        try:
            parts = [int(token) for token in text.split(',') if token.strip()]
        except ValueError:
            raise InvalidParameterValue(module=_MODULE_NAME, name=text, parameter='partition',
                                        cause='must_be_comma_separated_integers')
        return cls.of(parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def conjugate(self) -> Partition:
        return Partition(tuple(sum(1 for part in self.parts if part > index) for index in range(self.parts[0])))

    def __str__(self) -> str:
        return ','.join(str(part) for part in self.parts)


def all_partitions(total: int) -> List[Partition]:
    """Every partition of ``total``, in reverse lexicographic order."""
    result: List[Partition] = []

    def extend(remaining: int, largest: int, prefix: List[int]):
        if remaining == 0:
            result.append(Partition(tuple(prefix)))
            return
        for part in range(min(remaining, largest), 0, -1):
            extend(remaining - part, part, prefix + [part])

    extend(total, total, [])
    return result


def _check_total(family: str, size: int, partition: Partition):
    if family not in ('sl', 'so', 'sp'):
        raise InvalidParameterValue(module=_MODULE_NAME, name=f'{family}{size}', parameter='family',
                                    cause='must_be_sl_so_or_sp')
    if partition.total != size:
        raise InvalidParameterValue(module=_MODULE_NAME, name=f'{family}{size}', parameter='partition',
                                    cause=f'total_must_be_{size}')


def partition_valid(family: str, size: int, partition: Partition) -> bool:
    """Parity rule for nilpotent orbits: in ``so`` even parts, in ``sp`` odd parts, come with even multiplicity.

    :param size: Matrix size (``2n`` for ``sp_2n``).
    :raises InvalidParameterValue: If the partition does not add up to ``size``.
    """
    _check_total(family, size, partition)
    if family == 'sl':
        return True
    restricted_parity = 0 if family == 'so' else 1
    return all(count % 2 == 0 for part, count in partition.multiplicities().items()
               if part % 2 == restricted_parity)


def h_eigenvalues(partition: Partition) -> List[int]:
    """``k − 1, k − 3, ..., −(k − 1)`` for every part ``k``, sorted decreasingly."""
    values = [part - 1 - 2 * step for part in partition.parts for step in range(part)]
    return sorted(values, reverse=True)


def is_even_orbit(partition: Partition) -> bool:
    return len({part % 2 for part in partition.parts}) == 1


def is_distinguished(family: str, size: int, partition: Partition) -> bool:
    """Distinguished orbits: ``(n)`` in ``sl``, distinct odd parts in ``so``, distinct even parts in ``sp``.

    :raises InvalidParameterValue: If the partition is not the Jordan type of any nilpotent of the family.
    """
    if not partition_valid(family, size, partition):
        raise InvalidParameterValue(module=_MODULE_NAME, name=f'{family}{size}', parameter='partition',
                                    cause='not_a_nilpotent_orbit_of_family')
    if family == 'sl':
        return len(partition.parts) == 1
    distinct = len(set(partition.parts)) == len(partition.parts)
    parity = 1 if family == 'so' else 0
    return distinct and all(part % 2 == parity for part in partition.parts)


def toledo_rank_sl(partition: Partition) -> Fraction:
    """``(1/6)·Σ k(k² − 1)`` over the parts."""
    return Fraction(sum(part * (part * part - 1) for part in partition.parts), 6)


def sl_centralizer_dim(partition: Partition) -> int:
    """Dimension of the centralizer in ``sl_n`` of a nilpotent with this Jordan type."""
    return sum(part * part for part in partition.conjugate().parts) - 1
