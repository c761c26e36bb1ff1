from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Final, List, Sequence, Tuple

from models.algebra import exact_linalg
from models.algebra.lie_type import LieType
from models.algebra.rational_matrix import RatMatrix, to_rational
from models.exception.internal_inconsistency import InternalInconsistency
from models.exception.invalid_parameter_value import InvalidParameterValue
from models.utils.loggable import Loggable

Root = Tuple[int, ...]

_POSITIVE_ROOT_COUNT: Final[Dict[str, object]] = {
    'A': lambda n: n * (n + 1) // 2,
    'B': lambda n: n * n,
    'C': lambda n: n * n,
    'D': lambda n: n * (n - 1),
    'E': lambda n: {6: 36, 7: 63, 8: 120}[n],
    'F': lambda n: 24,
    'G': lambda n: 6,
}

# Bourbaki E_n diagram: chain 1-3-4-5-6-7-8 with node 2 attached to node 4
_E_EDGES: Final[List[Tuple[int, int]]] = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]


def simple_root_gram(lie_type: LieType) -> List[List[Fraction]]:
    """Inner products of the simple roots, long roots normalized to square length 2."""
    n = lie_type.rank
    gram = [[Fraction(0)] * n for _ in range(n)]

    def link(i: int, j: int, value) -> None:
        gram[i - 1][j - 1] = gram[j - 1][i - 1] = Fraction(value)

    family = lie_type.family
    if family == 'A':
        for i in range(1, n + 1):
            gram[i - 1][i - 1] = Fraction(2)
        for i in range(1, n):
            link(i, i + 1, -1)
    elif family == 'B':
        for i in range(1, n):
            gram[i - 1][i - 1] = Fraction(2)
        gram[n - 1][n - 1] = Fraction(1)
        for i in range(1, n):
            link(i, i + 1, -1)
    elif family == 'C':
        for i in range(1, n):
            gram[i - 1][i - 1] = Fraction(1)
        gram[n - 1][n - 1] = Fraction(2)
        for i in range(1, n - 1):
            link(i, i + 1, Fraction(-1, 2))
        link(n - 1, n, -1)
    elif family == 'D':
        for i in range(1, n + 1):
            gram[i - 1][i - 1] = Fraction(2)
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        if n >= 3:
            link(n - 2, n, -1)
    elif family == 'E':
        for i in range(1, n + 1):
            gram[i - 1][i - 1] = Fraction(2)
        for i, j in _E_EDGES:
            if i <= n and j <= n:
                link(i, j, -1)
    elif family == 'F':
        gram[0][0] = gram[1][1] = Fraction(2)
        gram[2][2] = gram[3][3] = Fraction(1)
        link(1, 2, -1)
        link(2, 3, -1)
        link(3, 4, Fraction(-1, 2))
    elif family == 'G':
        gram[0][0] = Fraction(2, 3)
        gram[1][1] = Fraction(2)
        link(1, 2, -1)
    return gram


class RootSystem(Loggable):
    """Root system of a simple Lie algebra in the simple root basis.

    Roots are integer tuples ``(n_1, ..., n_r)`` meaning ``Σ n_i α_i``. The Cartan matrix follows the convention
    ``A_ij = α_j(h_i) = 2(α_i, α_j)/(α_i, α_i)``, where ``h_i`` is the coroot of ``α_i``. Positive roots are
    generated from the simple ones with root strings: for a root ``β`` the ``α_i``-string through ``β`` goes
    down ``p`` steps and up ``q = p − β(h_i)`` steps.

    :param lie_type: Cartan type.
    :type lie_type: LieType

    :raises InternalInconsistency: If the generated root count differs from the classical one.
    """
    _MODULE_NAME: Final[str] = 'models.algebra.root_system'

    def __init__(self, lie_type: LieType) -> None:
        super().__init__(name=str(lie_type))
        self.lie_type: Final[LieType] = lie_type
        self.rank: Final[int] = lie_type.rank
        gram = simple_root_gram(lie_type)
        self.simple_gram: Final[RatMatrix] = RatMatrix(gram)
        self.cartan_matrix: Final[Tuple[Tuple[int, ...], ...]] = tuple(
            tuple(int(2 * gram[i][j] / gram[i][i]) for j in range(self.rank)) for i in range(self.rank))
        self.symmetrizer: Final[Tuple[Fraction, ...]] = tuple(gram[i][i] / 2 for i in range(self.rank))
        self.positive_roots: Final[Tuple[Root, ...]] = self._generate_positive_roots()
        self._root_set = set(self.positive_roots) | {self.negate(root) for root in self.positive_roots}
        self.highest_root: Final[Root] = max(self.positive_roots, key=lambda root: (self.height(root), root))
        self._validate()
        self._killing: RatMatrix = None
        self.print(f'{len(self.positive_roots)} positive roots, highest root {self.highest_root}')

    def _validate(self):
        expected = _POSITIVE_ROOT_COUNT[self.lie_type.family](self.rank)
        if len(self.positive_roots) != expected:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name,
                                        cause=f'positive_root_count_{len(self.positive_roots)}_expected_{expected}')
        for i in range(self.rank):
            if self.cartan_matrix[i][i] != 2 or any(
                    self.cartan_matrix[i][j] > 0 for j in range(self.rank) if j != i):
                raise InternalInconsistency(module=self.module_name, name=self.name, cause='cartan_matrix_shape')

    def _generate_positive_roots(self) -> Tuple[Root, ...]:
        simple = [tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)]
        found = set(simple)
        layer = list(simple)
        ordered = list(simple)
        while layer:
            next_layer = []
            for root in layer:
                for i in range(self.rank):
                    down = 0
                    lowered = list(root)
                    while True:
                        lowered[i] -= 1
                        if tuple(lowered) not in found:
                            break
                        down += 1
                    up = down - self.coroot_pairing(root, i)
                    if up > 0:
                        raised = tuple(value + (1 if j == i else 0) for j, value in enumerate(root))
                        if raised not in found:
                            found.add(raised)
                            next_layer.append(raised)
            next_layer.sort(key=lambda candidate: tuple(-value for value in candidate))
            ordered.extend(next_layer)
            layer = next_layer
        return tuple(ordered)

    # ----------------------------------------------------------------------------------------------------------------------#

    @staticmethod
    def height(root: Sequence[int]) -> int:
        return sum(root)

    @staticmethod
    def negate(root: Root) -> Root:
        return tuple(-value for value in root)

    def coroot_pairing(self, root: Sequence[int], index: int) -> int:
        """``β(h_i) = Σ_j n_j A_ij`` for ``β = Σ n_j α_j``."""
        return sum(value * self.cartan_matrix[index][j] for j, value in enumerate(root))

    def is_root(self, root: Sequence[int]) -> bool:
        return tuple(root) in self._root_set

    def roots(self) -> List[Root]:
        """All roots, positive ones first."""
        return list(self.positive_roots) + [self.negate(root) for root in self.positive_roots]

    @property
    def dimension(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    def root_inner_product(self, first: Sequence[int], second: Sequence[int]) -> Fraction:
        """Normalized inner product (long roots of square length 2) of two integer combinations of simple roots."""
        return (RatMatrix.column(list(first)).transpose() @ self.simple_gram @ RatMatrix.column(list(second)))[0, 0]

    def killing_on_cartan(self) -> RatMatrix:
        """Killing form on the coroot basis, ``B(h_i, h_j) = Σ_{α∈Δ} α(h_i)·α(h_j)``."""
        if self._killing is None:
            values = [[Fraction(0)] * self.rank for _ in range(self.rank)]
            for root in self.positive_roots:
                pairing = [self.coroot_pairing(root, i) for i in range(self.rank)]
                for i in range(self.rank):
                    for j in range(self.rank):
                        values[i][j] += 2 * pairing[i] * pairing[j]
            self._killing = RatMatrix(values)
        return self._killing

    def dual_vector(self, weight: Sequence) -> RatMatrix:
        """Coroot coordinates of the Cartan element ``t_λ`` that is Killing dual to ``λ``."""
        values = [to_rational(value) for value in weight]
        if len(values) != self.rank:
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter='weight', cause='length_must_equal_rank')
        pairing = RatMatrix.column([sum(values[j] * self.cartan_matrix[i][j] for j in range(self.rank))
                                    for i in range(self.rank)])
        solution = exact_linalg.solve_linear(self.killing_on_cartan(), pairing)
        if solution is None:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='singular_killing_form')
        return solution

    def dual_norm(self, weight: Sequence, form_scale: Fraction = Fraction(1)) -> Fraction:
        """``B(λ, λ) = λ(t_λ)`` for the form induced on the dual of the Cartan by ``form_scale·Killing``.

        :param weight: ``λ`` in the simple root basis (rational entries allowed).
        :type weight: Sequence
        :param form_scale: Positive factor multiplying the Killing form.
        :type form_scale: Fraction

        :return: The norm, divided by ``form_scale``.
        :rtype: Fraction
        """
        values = [to_rational(value) for value in weight]
        dual = self.dual_vector(values)
        norm = sum((dual[i, 0] * sum(values[j] * self.cartan_matrix[i][j] for j in range(self.rank))
                    for i in range(self.rank)), Fraction(0))
        return norm / to_rational(form_scale)


@lru_cache(maxsize=None)
def build_root_system(lie_type: LieType) -> RootSystem:
    """Cached constructor; root systems are immutable once built."""
    return RootSystem(lie_type)
