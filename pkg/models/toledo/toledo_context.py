from __future__ import annotations

from fractions import Fraction
from typing import Dict, Final, List, Optional

from models.algebra import exact_linalg
from models.algebra.graded_matrix_algebra import GradedMatrixAlgebra
from models.algebra.grading import Grading, make_grading
from models.algebra.rational_matrix import RatMatrix
from models.algebra.root_system import build_root_system
from models.algebra.sl2_triple import Sl2Triple, jm_complete
from models.exception.internal_inconsistency import InternalInconsistency
from models.exception.invalid_parameter_value import InvalidParameterValue
from models.exception.non_compatible_data import NonCompatibleData
from models.toledo.toledo_report import (CurvatureAtTriple, MaximalJMSubspace, PhvsRank, RelativeInvariantData,
                                         ToledoReport)
from models.utils.loggable import Loggable


class ToledoContext(Loggable):
    """Toledo data of a graded classical algebra ``ga`` and the matching root level grading ``g``.

    All matrix quantities use the algebra's form ``B = s·tr``. ``normalization`` is ``B(γ, γ)`` for the form dual to
    that same ``B``: the root level grading gives the Killing value, and ``Killing = c·tr`` converts it. Products
    such as ``B(h/2, h/2)·B(γ, γ)`` therefore do not depend on ``s``.

    :param ga: Graded matrix algebra.
    :type ga: GradedMatrixAlgebra
    :param g: Root level grading with the same labels; built from ``ga`` when omitted.
    :type g: Grading

    :raises NonCompatibleData: If ``g`` does not describe the grading of ``ga``.
    :raises InvalidParameterValue: If ``ζ`` is not dominant or ``𝔤_1`` is empty.
    """
    _MODULE_NAME: Final[str] = 'models.toledo.toledo_context'

    def __init__(self, ga: GradedMatrixAlgebra, g: Grading = None) -> None:
        super().__init__(name=ga.alg.name)
        if ga.labels is None:
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter='zeta', cause='must_be_dominant')
        if g is None:
            g = make_grading(build_root_system(ga.alg.lie_type), ga.labels)
        self._validate_parameters(ga, g)
        self.ga: Final[GradedMatrixAlgebra] = ga
        self.g: Final[Grading] = g
        self.alg = ga.alg
        self.zeta: Final[RatMatrix] = ga.zeta_matrix
        self.normalization: Final[Fraction] = (g.B_gamma_gamma * g.form_scale * self.alg.killing_ratio
                                               / self.alg.form_scale)
        self._triples: Dict[RatMatrix, Sl2Triple] = {}
        self._check_zeta_norm()

    def _validate_parameters(self, ga: GradedMatrixAlgebra, g: Grading):
        if g.rs.lie_type != ga.alg.lie_type or list(g.labels) != list(ga.labels):
            raise NonCompatibleData(module=self._MODULE_NAME, name=self.name, cause='grading_does_not_match_algebra')
        if not g.has_toledo_data:
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name, parameter='labels',
                                        cause='empty_g1')
        for degree, dimension in g.degree_dims().items():
            if ga.dim(degree) != dimension:
                raise InternalInconsistency(module=self._MODULE_NAME, name=self.name,
                                            cause=f'piece_{degree}_dimension_mismatch')

    def _check_zeta_norm(self):
        matrix_value = self.alg.form(self.zeta, self.zeta) * self.normalization
        if matrix_value != self.g.jm_regular_rank:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name,
                                        cause='zeta_norm_differs_between_matrix_and_root_level')

    # ----------------------------------------------------------------------------------------------------------------------#

    @property
    def B_zeta_zeta_times_Bgg(self) -> Fraction:
        return self.alg.form(self.zeta, self.zeta) * self.normalization

    def triple(self, e: RatMatrix) -> Sl2Triple:
        if e not in self._triples:
            self._triples[e] = jm_complete(self.ga, e, 1)
        return self._triples[e]

    def _require_g1(self, e: RatMatrix):
        self.ga.require_in_piece(e, 1)

    def toledo_character(self, x: RatMatrix) -> Fraction:
        """``χ_T(x) = B(ζ, x)·B(γ, γ)`` for ``x ∈ 𝔤_0``."""
        return self.alg.form(self.zeta, x) * self.normalization

    def toledo_rank(self, e: RatMatrix) -> Fraction:
        """``rk_T(e) = B(h/2, h/2)·B(γ, γ)``, checked against ``½χ_T(h)`` and ``B(h/2, s) = 0``.

        :raises InvalidParameterValue: If ``e`` is not in ``𝔤_1``.
        :raises InternalInconsistency: If the two expressions differ.
        """
        self._require_g1(e)
        if e.is_zero():
            return Fraction(0)
        h_half = self.triple(e).h * Fraction(1, 2)
        rank = self.alg.form(h_half, h_half) * self.normalization
        if self.toledo_character(self.triple(e).h) / 2 != rank:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='character_and_norm_differ')
        if self.alg.form(h_half, self.zeta - h_half) != 0:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='h_not_orthogonal_to_s')
        return rank

    def phvs_toledo_rank(self, seed: int) -> PhvsRank:
        generic = self.ga.generic_element(seed, 1)
        return PhvsRank(rank=self.toledo_rank(generic.element), certified=generic.certified,
                        element=generic.element)

    def _require_nonzero(self, e: RatMatrix):
        self._require_g1(e)
        if e.is_zero():
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name, parameter='e',
                                        cause='must_be_nonzero')

    def s_element(self, e: RatMatrix) -> RatMatrix:
        self._require_nonzero(e)
        return self.zeta - self.triple(e).h * Fraction(1, 2)

    def jm_regularity(self, e: RatMatrix):
        """``(s == 0, s)`` for ``s = ζ − h/2``."""
        s = self.s_element(e)
        return s.is_zero(), s

    def maximal_jm_subspace(self, e: RatMatrix) -> MaximalJMSubspace:
        s = self.s_element(e)
        triple = self.triple(e)
        hat_g0 = self.ga.centralizer_coordinates([s], 0)
        hat_g1 = self.ga.centralizer_coordinates([s], 1)
        if not exact_linalg.in_span(hat_g1, self.alg.coordinates(e)):
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='e_not_in_hat_g1')
        hat_orbit_open = (exact_linalg.rank(self.alg.ad_matrix(e, hat_g0)) == len(hat_g1)) if hat_g0 else not hat_g1
        if not hat_orbit_open:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='hat_orbit_not_open')
        hat_algebra = self.ga.centralizer_coordinates([s], None)
        reductive = exact_linalg.form_nondegenerate(self.alg.restricted_gram(hat_algebra))
        if not reductive:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='centralizer_of_s_degenerate')
        c_hat = self.ga.centralizer_coordinates([triple.e, triple.h, triple.f], 0)
        return MaximalJMSubspace(s=s, hat_g0_basis=hat_g0, hat_g1_basis=hat_g1,
                                 parabolic_dim=self._parabolic_dim(s), c_hat_dim=len(c_hat),
                                 hat_orbit_open=hat_orbit_open, hat_algebra_reductive=reductive)

    def _parabolic_dim(self, s: RatMatrix) -> int:
        """Dimension of the sum of the ``ad_s``-eigenspaces of ``𝔤_0`` with eigenvalue ``≤ 0``."""
        piece = self.ga.piece(0)
        span = RatMatrix.from_columns(piece)
        images = self.alg.ad_matrix(s, piece)
        columns = []
        for image in images.columns():
            solution = exact_linalg.solve_linear(span, image)
            if solution is None:
                raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='s_does_not_preserve_g0')
            columns.append(solution)
        restricted = RatMatrix.from_columns(columns)
        bound = 2 * (self.alg.size - 1)
        spectrum, complete = exact_linalg.rational_spectrum(
            restricted, [Fraction(k, 2) for k in range(-bound, bound + 1)])
        if not complete:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='s_not_semisimple')
        return sum(multiplicity for value, multiplicity in spectrum.items() if value <= 0)

    def stabilizer(self, e: RatMatrix) -> List[RatMatrix]:
        """Coordinate basis of ``𝔤_0^e``."""
        return self.ga.centralizer_coordinates([e], 0)

    def phvs_regular(self, e: RatMatrix, certified: bool) -> bool:
        """Nondegeneracy of ``B`` on ``𝔤_0^e`` for a certified point of the open orbit.

        :raises InvalidParameterValue: If ``certified`` is ``False``.
        """
        if not certified:
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name, parameter='e',
                                        cause='orbit_not_certified_open')
        self._require_g1(e)
        return exact_linalg.form_nondegenerate(self.alg.restricted_gram(self.stabilizer(e)))

    def relative_invariant_data(self, e: RatMatrix) -> RelativeInvariantData:
        self._require_nonzero(e)
        vanishes = all(self.alg.form(self.zeta, self.alg.element(vector)) == 0 for vector in self.stabilizer(e))
        h_half = self.triple(e).h * Fraction(1, 2)
        return RelativeInvariantData(chi_vanishes_on_stabilizer=vanishes,
                                     degree_over_q=h_half.trace_pairing(h_half))

    def curvature_at_triple(self, e: RatMatrix) -> CurvatureAtTriple:
        """``K_norm(e) = −1/rk_T(e)`` and ``K(e) = −2/B(ζ, h)``; their ratio is ``B(γ, γ)``.

        :raises InvalidParameterValue: If ``rk_T(e) = 0``.
        """
        rank = self.toledo_rank(e)
        if rank == 0:
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name, parameter='rk_T',
                                        cause='undefined_curvature')
        normalized = -1 / rank
        raw = Fraction(-2) / self.alg.form(self.zeta, self.triple(e).h)
        if raw / normalized != self.normalization:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='curvature_ratio')
        return CurvatureAtTriple(normalized=normalized, raw_at_form_scale=raw)

    # ----------------------------------------------------------------------------------------------------------------------#

    def report(self, seed: int, e: Optional[RatMatrix] = None) -> ToledoReport:
        """Every Toledo quantity at ``e`` (a point of the open orbit found with ``seed`` when omitted).

        When ``e`` is given, the open orbit certification still refers to the generic element used for
        ``rk_T_phvs``.
        """
        phvs = self.phvs_toledo_rank(seed)
        if e is None:
            e = phvs.element
        rank = self.toledo_rank(e)
        if not 0 <= rank <= phvs.rank:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='rank_sandwich')
        certified_here = phvs.certified and (e == phvs.element or self.ga.orbit_is_open(e))
        if e.is_zero():
            s, jm_regular, hat = self.zeta, False, None
            relative = RelativeInvariantData(chi_vanishes_on_stabilizer=True, degree_over_q=Fraction(0))
            curvature = None
        else:
            jm_regular, s = self.jm_regularity(e)
            hat = self.maximal_jm_subspace(e)
            relative = self.relative_invariant_data(e)
            curvature = self.curvature_at_triple(e)
            if jm_regular and (hat.hat_dims != (self.ga.dim(0), self.ga.dim(1))):
                raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='jm_regular_hat_dims')
        if jm_regular and certified_here and rank != self.B_zeta_zeta_times_Bgg:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='jm_regular_rank')
        regular = self.phvs_regular(e, True) if certified_here else None
        self.print(f'rk_T(e)={rank} rk_T(phvs)={phvs.rank} jm_regular={jm_regular}')
        return ToledoReport(
            rk_T_e=rank,
            rk_T_phvs=phvs.rank,
            B_zeta_zeta_times_Bgg=self.B_zeta_zeta_times_Bgg,
            jm_regular=jm_regular,
            s_vector=s,
            hat_dims=hat.hat_dims if hat is not None else (0, 0),
            parabolic_dim=hat.parabolic_dim if hat is not None else self.ga.dim(0),
            c_hat_dim=hat.c_hat_dim if hat is not None else self.ga.dim(0),
            form_nondegenerate_on_stabilizer=regular,
            open_orbit_certified=certified_here,
            chi_vanishes_on_stabilizer=relative.chi_vanishes_on_stabilizer,
            degree_over_q=relative.degree_over_q,
            curvature=curvature,
            e=e,
            h=self.triple(e).h if not e.is_zero() else RatMatrix.zeros(self.alg.size, self.alg.size),
        )


# ----------------------------------------------------------------------------------------------------------------------#


def _context(ga: GradedMatrixAlgebra, g: Grading) -> ToledoContext:
    return ToledoContext(ga, g)


def toledo_rank(ga: GradedMatrixAlgebra, g: Grading, e: RatMatrix) -> Fraction:
    return _context(ga, g).toledo_rank(e)


def phvs_toledo_rank(ga: GradedMatrixAlgebra, g: Grading, seed: int):
    result = _context(ga, g).phvs_toledo_rank(seed)
    return result.rank, result.certified


def jm_regularity(ga: GradedMatrixAlgebra, g: Grading, e: RatMatrix):
    return _context(ga, g).jm_regularity(e)


def maximal_jm_subspace(ga: GradedMatrixAlgebra, g: Grading, e: RatMatrix):
    result = _context(ga, g).maximal_jm_subspace(e)
    return result.hat_g0_basis, result.hat_g1_basis, result.parabolic_dim, result.c_hat_dim


def phvs_regular(ga: GradedMatrixAlgebra, g: Grading, e: RatMatrix, certified: bool = None) -> bool:
    """When ``certified`` is omitted the open orbit test is run on ``e``."""
    context = _context(ga, g)
    if certified is None:
        certified = ga.orbit_is_open(e)
    return context.phvs_regular(e, certified)


def relative_invariant_data(ga: GradedMatrixAlgebra, g: Grading, e: RatMatrix):
    result = _context(ga, g).relative_invariant_data(e)
    return result.chi_vanishes_on_stabilizer, result.degree_over_q


def curvature_at_triple(ga: GradedMatrixAlgebra, g: Grading, e: RatMatrix) -> Fraction:
    return _context(ga, g).curvature_at_triple(e).normalized


def toledo_report(ga: GradedMatrixAlgebra, seed: int, e: Optional[RatMatrix] = None) -> ToledoReport:
    return ToledoContext(ga).report(seed, e)
