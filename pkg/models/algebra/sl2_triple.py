from __future__ import annotations

from dataclasses import dataclass
from typing import Final, List, Optional, Sequence

from models.algebra import exact_linalg
from models.algebra.graded_matrix_algebra import GradedMatrixAlgebra
from models.algebra.matrix_lie_algebra import MatrixLieAlgebra
from models.algebra.rational_matrix import RatMatrix
from models.exception.internal_inconsistency import InternalInconsistency
from models.exception.invalid_parameter_value import InvalidParameterValue

_MODULE_NAME: Final[str] = 'models.algebra.sl2_triple'


@dataclass(frozen=True)
class Sl2Triple:
    """``(f, h, e)`` with ``[h, e] = 2e``, ``[h, f] = −2f`` and ``[e, f] = h``.

    ``degree`` is the degree of ``e`` when the triple was completed inside a grading (``h`` then has degree 0 and
    ``f`` degree ``−degree``), ``None`` otherwise.
    """
    e: RatMatrix
    h: RatMatrix
    f: RatMatrix
    degree: Optional[int] = None

    def satisfies_relations(self) -> bool:
        return (self.h.bracket(self.e) == self.e * 2
                and self.h.bracket(self.f) == self.f * (-2)
                and self.e.bracket(self.f) == self.h)

    @property
    def h_in_cartan(self) -> bool:
        return self.h.is_diagonal()

    @property
    def is_zero(self) -> bool:
        return self.e.is_zero()

    @classmethod
    def zero(cls, size: int, degree: Optional[int] = None) -> Sl2Triple:
        zero = RatMatrix.zeros(size, size)
        return cls(e=zero, h=zero, f=zero, degree=degree)


def _check_nilpotent(alg: MatrixLieAlgebra, e: RatMatrix):
    if e.is_zero():
        raise InvalidParameterValue(module=_MODULE_NAME, name=alg.name, parameter='e', cause='must_be_nonzero')
    if not alg.is_nilpotent(e):
        raise InvalidParameterValue(module=_MODULE_NAME, name=alg.name, parameter='e', cause='must_be_nilpotent')


def _solve_for_h(alg: MatrixLieAlgebra, e: RatMatrix, domain: Sequence[RatMatrix]) -> RatMatrix:
    """``h = [e, y]`` with ``[[e, y], e] = 2e`` for ``y`` in the span of ``domain``.

    A solution with ``h`` diagonal is preferred; any solution is accepted otherwise.
    """
    commutators = [alg.bracket_with_coordinates(e, vector) for vector in domain]
    images = RatMatrix.from_columns([alg.coordinates(w.bracket(e)) for w in commutators])
    target = alg.coordinates(e * 2)
    cartan = set(alg.cartan_indices)
    off_cartan = [k for k in range(alg.dimension) if k not in cartan]
    commutator_coordinates = RatMatrix.from_columns([alg.coordinates(w) for w in commutators])
    constrained = RatMatrix.vstack([images, commutator_coordinates.select_rows(off_cartan)])
    solution = exact_linalg.solve_linear(
        constrained, RatMatrix.vstack([target, RatMatrix.zeros(len(off_cartan), 1)]))
    if solution is None:
        solution = exact_linalg.solve_linear(images, target)
    if solution is None:
        raise InternalInconsistency(module=_MODULE_NAME, name=alg.name, cause='no_h_in_image_of_ad_e')
    h = RatMatrix.zeros(alg.size, alg.size)
    for coefficient, w in zip(solution.flatten(), commutators):
        if coefficient != 0:
            h = h + w * coefficient
    return h


def _solve_for_f(alg: MatrixLieAlgebra, e: RatMatrix, h: RatMatrix, domain: Sequence[RatMatrix]) -> RatMatrix:
    with_e = RatMatrix.from_columns([alg.coordinates(alg.bracket_with_coordinates(e, vector)) for vector in domain])
    with_h = RatMatrix.from_columns([alg.coordinates(alg.bracket_with_coordinates(h, vector)) + vector * 2
                                     for vector in domain])
    system = RatMatrix.vstack([with_e, with_h])
    rhs = RatMatrix.vstack([alg.coordinates(h), RatMatrix.zeros(alg.dimension, 1)])
    solution = exact_linalg.solve_linear(system, rhs)
    if solution is None:
        raise InternalInconsistency(module=_MODULE_NAME, name=alg.name, cause='no_f_for_triple')
    return alg.element(RatMatrix.from_columns(list(domain)) @ solution)


def complete_triple(alg: MatrixLieAlgebra, e: RatMatrix, domain: List[RatMatrix],
                    degree: Optional[int] = None) -> Sl2Triple:
    """Jacobson–Morozov completion with ``f`` (and the auxiliary ``y``) searched in ``domain``."""
    if not domain:
        raise InternalInconsistency(module=_MODULE_NAME, name=alg.name, cause='empty_search_space')
    h = _solve_for_h(alg, e, domain)
    f = _solve_for_f(alg, e, h, domain)
    triple = Sl2Triple(e=e, h=h, f=f, degree=degree)
    if not triple.satisfies_relations():
        raise InternalInconsistency(module=_MODULE_NAME, name=alg.name, cause='bracket_relations_fail')
    alg.print(f'triple completed, h diagonal: {triple.h_in_cartan}')
    return triple


def jm_complete(ga: GradedMatrixAlgebra, e: RatMatrix, degree: int = 1) -> Sl2Triple:
    """Graded Jacobson–Morozov completion: ``e ∈ 𝔤_k`` gives ``h ∈ 𝔤_0 ∩ im ad_e`` and ``f ∈ 𝔤_{−k}``.

    :param ga: Graded algebra.
    :type ga: GradedMatrixAlgebra
    :param e: Nonzero nilpotent element of ``𝔤_degree``.
    :type e: RatMatrix
    :param degree: ``k``, nonzero.
    :type degree: int

    :raises InvalidParameterValue: If ``e`` is zero, not nilpotent or not in ``𝔤_degree``.
    :raises InternalInconsistency: If a linear system that the theory says is solvable is not.

    :return: The triple.
    :rtype: Sl2Triple
    """
    if degree == 0:
        raise InvalidParameterValue(module=_MODULE_NAME, name=ga.name, parameter='degree', cause='must_be_nonzero')
    ga.require_in_piece(e, degree)
    _check_nilpotent(ga.alg, e)
    triple = complete_triple(ga.alg, e, ga.piece(-degree), degree)
    if not ga.in_piece(triple.h, 0) or not ga.in_piece(triple.f, -degree):
        raise InternalInconsistency(module=_MODULE_NAME, name=ga.name, cause='triple_not_graded')
    return triple


def jm_triple(alg: MatrixLieAlgebra, e: RatMatrix) -> Sl2Triple:
    """Ungraded completion of a nonzero nilpotent ``e`` inside the whole algebra."""
    alg.require_member(e, 'e')
    _check_nilpotent(alg, e)
    return complete_triple(alg, e, [alg.unit_coordinates(k) for k in range(alg.dimension)])
