from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Final, Tuple

from models.exception.invalid_parameter_value import InvalidParameterValue

_MODULE_NAME: Final[str] = 'models.algebra.lie_type'

_TYPE_PATTERN: Final = re.compile(r'^([A-Ga-g])(\d+)$')
_FAMILY_PATTERN: Final = re.compile(r'^(sl|so|sp)(\d+)$')


@dataclass(frozen=True, order=True)
class LieType:
    """Cartan type of a simple Lie algebra, e.g. ``B3``.

    Valid pairs are ``A_n`` (n ≥ 1), ``B_n`` and ``C_n`` (n ≥ 2), ``D_n`` (n ≥ 2, with ``D_2 = A_1 × A_1`` and
    ``D_3 = A_3`` kept for the matrix families ``so_4`` and ``so_6``), ``E_6``, ``E_7``, ``E_8``, ``F_4`` and ``G_2``.
    Nodes are numbered as in Bourbaki.
    """
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ('A', 'B', 'C', 'D', 'E', 'F', 'G'):
            raise InvalidParameterValue(module=_MODULE_NAME, name=str(self.family),
                                        parameter='family', cause='must_be_one_of_A_B_C_D_E_F_G')
        if type(self.rank) is not int:
            raise InvalidParameterValue(module=_MODULE_NAME, name=self.family,
                                        parameter='rank', cause='must_be_int')
        minimum = {'A': 1, 'B': 2, 'C': 2, 'D': 2}
        if self.family in minimum and self.rank < minimum[self.family]:
            raise InvalidParameterValue(module=_MODULE_NAME, name=f'{self.family}{self.rank}',
                                        parameter='rank', cause=f'must_be_at_least_{minimum[self.family]}')
        if self.family == 'E' and self.rank not in (6, 7, 8):
            raise InvalidParameterValue(module=_MODULE_NAME, name=f'{self.family}{self.rank}',
                                        parameter='rank', cause='must_be_6_7_or_8')
        if self.family == 'F' and self.rank != 4:
            raise InvalidParameterValue(module=_MODULE_NAME, name=f'{self.family}{self.rank}',
                                        parameter='rank', cause='must_be_4')
        if self.family == 'G' and self.rank != 2:
            raise InvalidParameterValue(module=_MODULE_NAME, name=f'{self.family}{self.rank}',
                                        parameter='rank', cause='must_be_2')

    @classmethod
    def parse(cls, text: str) -> LieType:
        match = _TYPE_PATTERN.match(text.strip())
        if match is None:
            raise InvalidParameterValue(module=_MODULE_NAME, name=text,
                                        parameter='lie_type', cause='must_look_like_B3')
        return cls(match.group(1).upper(), int(match.group(2)))

    @property
    def is_classical(self) -> bool:
        return self.family in ('A', 'B', 'C', 'D')

    def matrix_family(self) -> Tuple[str, int]:
        """Classical matrix model ``(family, matrix size)``: ``A_n → sl_{n+1}``, ``B_n → so_{2n+1}``,
        ``C_n → sp_{2n}``, ``D_n → so_{2n}``.
        """
        if self.family == 'A':
            return 'sl', self.rank + 1
        if self.family == 'B':
            return 'so', 2 * self.rank + 1
        if self.family == 'C':
            return 'sp', 2 * self.rank
        if self.family == 'D':
            return 'so', 2 * self.rank
        raise InvalidParameterValue(module=_MODULE_NAME, name=str(self),
                                    parameter='family', cause='exceptional_type_has_no_matrix_model')

    @classmethod
    def from_matrix_family(cls, family: str, size: int) -> LieType:
        """Inverse of :meth:`matrix_family`; ``size`` is the size of the matrices."""
        if family == 'sl' and size >= 2:
            return cls('A', size - 1)
        if family == 'so' and size >= 5 and size % 2 == 1:
            return cls('B', (size - 1) // 2)
        if family == 'so' and size >= 4 and size % 2 == 0:
            return cls('D', size // 2)
        if family == 'sp' and size >= 4 and size % 2 == 0:
            return cls('C', size // 2)
        raise InvalidParameterValue(module=_MODULE_NAME, name=f'{family}{size}',
                                    parameter='size', cause='no_simple_classical_algebra')

    @staticmethod
    def parse_family(text: str) -> Tuple[str, int]:
        """Parses ``sl5``, ``so7`` or ``sp4`` into ``(family, matrix size)``."""
        match = _FAMILY_PATTERN.match(text.strip())
        if match is None:
            raise InvalidParameterValue(module=_MODULE_NAME, name=text,
                                        parameter='family', cause='must_look_like_so7')
        return match.group(1), int(match.group(2))

    def __str__(self) -> str:
        return f'{self.family}{self.rank}'
