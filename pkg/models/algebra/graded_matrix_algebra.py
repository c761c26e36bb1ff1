from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Final, List, Optional, Sequence

import numpy

from config.configuration import Configuration
from models.algebra import exact_linalg
from models.algebra.classical_zeta import diagonal_from_labels, labels_from_diagonal
from models.algebra.matrix_lie_algebra import MatrixLieAlgebra, build_matrix_algebra
from models.algebra.rational_matrix import RatMatrix, to_rational
from models.exception.invalid_parameter_value import InvalidParameterValue
from models.exception.unsupported_operation import UnsupportedOperation
from models.utils.loggable import Loggable


@dataclass(frozen=True)
class GenericElement:
    """Outcome of the search for a point of the open orbit in ``𝔤_k``."""
    element: RatMatrix
    orbit_dim: int
    certified: bool
    attempts: int


class GradedMatrixAlgebra(Loggable):
    """Classical matrix algebra graded by the eigenvalues of ``ad_ζ`` for a diagonal ``ζ``.

    ``𝔤_j = {x : [ζ, x] = j·x}``; each piece is computed as an exact kernel of ``ad_ζ − j``. When ``ζ`` is dominant
    its Dynkin labels are recorded in :attr:`labels` so the root level grading can be rebuilt.

    :param alg: The algebra.
    :type alg: MatrixLieAlgebra
    :param zeta_diagonal: Diagonal of ``ζ``; ``None`` gives the trivial grading.
    :type zeta_diagonal: Sequence

    :raises InvalidParameterValue: If ``ζ`` is not in the algebra or ``ad_ζ`` has a non integral eigenvalue.
    """
    _MODULE_NAME: Final[str] = 'models.algebra.graded_matrix_algebra'

    def __init__(self, alg: MatrixLieAlgebra, zeta_diagonal: Sequence = None) -> None:
        diagonal = [Fraction(0)] * alg.size if zeta_diagonal is None else [to_rational(v) for v in zeta_diagonal]
        super().__init__(name=f'{alg.name}{[str(value) for value in diagonal]}')
        self.alg: Final[MatrixLieAlgebra] = alg
        if len(diagonal) != alg.size:
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter='zeta', cause=f'must_have_{alg.size}_entries')
        self.zeta_matrix: Final[RatMatrix] = RatMatrix.diagonal(diagonal)
        if not alg.contains(self.zeta_matrix):
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter='zeta', cause=f'not_in_{alg.name}')
        self.piece_basis: Dict[int, List[RatMatrix]] = self._decompose()
        try:
            self.labels: Optional[List[int]] = labels_from_diagonal(alg.family, alg.size, diagonal)
        except InvalidParameterValue:
            self.labels = None
        self.print(f'piece dimensions {self.degree_dims()}')

    def _decompose(self) -> Dict[int, List[RatMatrix]]:
        ad_zeta = self.alg.ad_matrix(self.zeta_matrix)
        diagonal = self.zeta_matrix.diagonal_entries()
        candidates = {a - b for a in diagonal for b in diagonal}
        spectrum, complete = exact_linalg.rational_spectrum(ad_zeta, candidates)
        if not complete or any(value.denominator != 1 for value in spectrum):
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter='zeta', cause='ad_eigenvalues_must_be_integers')
        pieces = {int(value): exact_linalg.eigenspace(ad_zeta, value) for value in spectrum}
        pieces.setdefault(0, [])
        return pieces

    # ----------------------------------------------------------------------------------------------------------------------#

    def piece(self, degree: int) -> List[RatMatrix]:
        """Coordinate vectors spanning ``𝔤_degree`` (empty when the degree does not occur)."""
        return list(self.piece_basis.get(degree, []))

    def piece_elements(self, degree: int) -> List[RatMatrix]:
        return [self.alg.element(vector) for vector in self.piece(degree)]

    def dim(self, degree: int) -> int:
        return len(self.piece_basis.get(degree, []))

    def degree_dims(self) -> Dict[int, int]:
        return {degree: len(vectors) for degree, vectors in sorted(self.piece_basis.items()) if vectors}

    @property
    def zeta_diagonal(self) -> List[Fraction]:
        return self.zeta_matrix.diagonal_entries()

    def degree_of(self, x: RatMatrix) -> Optional[int]:
        """The degree ``j`` with ``[ζ, x] = j·x`` for a nonzero homogeneous ``x``, else ``None``."""
        if x.is_zero():
            return None
        commutator = self.zeta_matrix.bracket(x)
        for degree in self.piece_basis:
            if commutator == x * degree:
                return degree
        return None

    def in_piece(self, x: RatMatrix, degree: int) -> bool:
        return self.alg.contains(x) and self.zeta_matrix.bracket(x) == x * degree

    def require_in_piece(self, x: RatMatrix, degree: int, parameter: str = 'e'):
        self.alg.require_member(x, parameter)
        if self.zeta_matrix.bracket(x) != x * degree:
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter=parameter, cause=f'not_in_g{degree}')

    def verify_grading(self) -> bool:
        """``[𝔤_i, 𝔤_j] ⊆ 𝔤_{i+j}`` on every pair of basis vectors."""
        for first, vectors in self.piece_basis.items():
            for vector in vectors:
                x = self.alg.element(vector)
                for second, others in self.piece_basis.items():
                    for other in others:
                        commutator = self.alg.bracket_with_coordinates(x, other)
                        if not commutator.is_zero() and not self.in_piece(commutator, first + second):
                            return False
        return True

    # ----------------------------------------------------------------------------------------------------------------------#

    def orbit_map(self, e: RatMatrix, source_degree: int = 0) -> RatMatrix:
        """Matrix of ``x ↦ [e, x]`` on ``𝔤_source_degree`` in full coordinates."""
        return self.alg.ad_matrix(e, self.piece(source_degree))

    def orbit_dimension(self, e: RatMatrix) -> int:
        return exact_linalg.rank(self.orbit_map(e))

    def orbit_is_open(self, e: RatMatrix, degree: int = 1) -> bool:
        """True iff ``x ↦ [x, e]`` maps ``𝔤_0`` onto ``𝔤_degree``."""
        return self.orbit_dimension(e) == self.dim(degree)

    def centralizer_coordinates(self, elements: Sequence[RatMatrix], degree: Optional[int] = 0) -> List[RatMatrix]:
        """Coordinate basis of ``{x ∈ 𝔤_degree : [x, y] = 0 for every y}``; ``degree=None`` selects all of ``𝔤``."""
        if degree is None:
            domain = [self.alg.unit_coordinates(k) for k in range(self.alg.dimension)]
        else:
            domain = self.piece(degree)
        if not domain:
            return []
        blocks = [self.alg.ad_matrix(y, domain) for y in elements]
        if not blocks:
            return list(domain)
        kernel = exact_linalg.kernel_basis(RatMatrix.vstack(blocks))
        span = RatMatrix.from_columns(domain)
        return [span @ vector for vector in kernel]

    def centralizer_in(self, elements: Sequence[RatMatrix], degree: Optional[int] = 0) -> List[RatMatrix]:
        return [self.alg.element(vector) for vector in self.centralizer_coordinates(elements, degree)]

    def combination(self, degree: int, coefficients: Sequence[int]) -> RatMatrix:
        vectors = self.piece(degree)
        total = RatMatrix.zeros(self.alg.dimension, 1)
        for coefficient, vector in zip(coefficients, vectors):
            total = total + vector * coefficient
        return self.alg.element(total)

    def generic_element(self, seed: int, degree: int = 1, max_attempts: int = None) -> GenericElement:
        """Deterministic search for a point of the open ``G_0``-orbit in ``𝔤_degree``.

        The all ones combination of the piece basis is tried first, then combinations with coefficients drawn from
        ``±`` small primes by ``numpy.random.default_rng(seed)``. The first certified element is returned, otherwise
        the element of largest orbit dimension.
        """
        size = self.dim(degree)
        if size == 0:
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter='degree', cause=f'empty_g{degree}')
        if max_attempts is None:
            max_attempts = Configuration.get_max_attempts()
        primes = Configuration.get_coefficient_primes()
        generator = numpy.random.default_rng(seed)
        best: GenericElement = None
        for attempt in range(1, max_attempts + 1):
            if attempt == 1:
                coefficients = [1] * size
            else:
                magnitudes = generator.choice(primes, size=size)
                signs = generator.choice([-1, 1], size=size)
                coefficients = [int(m) * int(s) for m, s in zip(magnitudes, signs)]
            element = self.combination(degree, coefficients)
            orbit_dim = self.orbit_dimension(element)
            if best is None or orbit_dim > best.orbit_dim:
                best = GenericElement(element=element, orbit_dim=orbit_dim, certified=orbit_dim == size,
                                      attempts=attempt)
            if best.certified:
                break
        self.print(f'generic element in g{degree}: orbit dimension {best.orbit_dim}/{size} '
                   f'after {best.attempts} attempt(s)')
        return best


def build_classical(family: str, size: int, labels: Sequence[int] = None, diagonal: Sequence = None,
                    form_scale: Fraction = Fraction(1)) -> GradedMatrixAlgebra:
    """Graded classical algebra from Dynkin labels or an explicit diagonal ``ζ``.

    :raises UnsupportedOperation: For exceptional families.
    :raises InvalidParameterValue: If both or neither of ``labels`` and ``diagonal`` are given, or they do not fit the family.
    """
    if family not in ('sl', 'so', 'sp'):
        raise UnsupportedOperation(module=GradedMatrixAlgebra._MODULE_NAME, name=f'{family}{size}',
                                   cause='only_sl_so_sp_have_matrix_models')
    if labels is not None and diagonal is not None:
        raise InvalidParameterValue(module=GradedMatrixAlgebra._MODULE_NAME, name=f'{family}{size}',
                                    parameter='zeta_spec', cause='give_labels_or_diagonal_not_both')
    alg = build_matrix_algebra(family, size, Fraction(form_scale))
    if labels is not None:
        for label in labels:
            if int(label) != label or label < 0:
                raise InvalidParameterValue(module=GradedMatrixAlgebra._MODULE_NAME, name=alg.name,
                                            parameter='labels', cause='must_be_nonnegative_integers')
        diagonal = diagonal_from_labels(family, size, labels)
    return GradedMatrixAlgebra(alg, diagonal)


def orbit_is_open(ga: GradedMatrixAlgebra, e: RatMatrix, degree: int = 1) -> bool:
    return ga.orbit_is_open(e, degree)


def centralizer_in(ga: GradedMatrixAlgebra, elements: Sequence[RatMatrix], degree: Optional[int] = 0) \
        -> List[RatMatrix]:
    return ga.centralizer_in(elements, degree)


def generic_g1_element(ga: GradedMatrixAlgebra, seed: int, degree: int = 1) -> GenericElement:
    return ga.generic_element(seed, degree)
