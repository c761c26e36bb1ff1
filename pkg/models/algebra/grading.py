from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Final, List, Optional, Sequence

from models.algebra import exact_linalg
from models.algebra.rational_matrix import RatMatrix, to_rational
from models.algebra.root_system import Root, RootSystem
from models.exception.internal_inconsistency import InternalInconsistency
from models.exception.invalid_parameter_value import InvalidParameterValue
from models.utils.loggable import Loggable


@dataclass(frozen=True)
class ToledoCharacter:
    """``χ_T(x) = B(ζ, x)·B(γ, γ)``; ``zeta`` holds coroot coordinates and ``normalization`` is ``B(γ, γ)``."""
    zeta: RatMatrix
    normalization: Fraction


@dataclass(frozen=True)
class ParityRealForm:
    """Dimensions of the real form whose Cartan involution acts by ``(−1)^j`` on ``𝔤_j``."""
    dim_h: int
    dim_m: int
    period_domain_dim: int


class Grading(Loggable):
    """ℤ-grading of a simple Lie algebra given by nonnegative Dynkin labels.

    The degree of ``α = Σ n_i α_i`` is ``Σ n_i p_i``. The grading element ``ζ`` is the Cartan element with
    ``α_i(ζ) = p_i`` and is stored in coroot coordinates. When ``𝔤_1`` is not empty the Toledo data is filled in:
    ``γ`` is the lexicographically smallest longest root of degree one, ``B_gamma_gamma`` its norm for the form
    dual to ``B`` and ``B_zeta_zeta`` the norm of ``ζ``. ``B`` is ``form_scale`` times the Killing form; the products
    used downstream do not depend on the scale.

    :param rs: Root system.
    :type rs: RootSystem
    :param labels: One nonnegative integer per node.
    :type labels: Sequence[int]
    :param form_scale: Positive rational multiple of the Killing form to use as ``B``.
    :type form_scale: Fraction

    :raises InvalidParameterValue: If the labels have the wrong length, are negative or all zero.
    """
    _MODULE_NAME: Final[str] = 'models.algebra.grading'

    def __init__(self, rs: RootSystem, labels: Sequence[int], form_scale: Fraction = Fraction(1)) -> None:
        super().__init__(name=f'{rs.lie_type}{list(labels)}')
        self._validate_parameters(rs, labels, form_scale)
        self.rs: Final[RootSystem] = rs
        self.labels: Final[tuple] = tuple(int(label) for label in labels)
        self.form_scale: Final[Fraction] = to_rational(form_scale)

        self.pieces: Dict[int, List[Root]] = {}
        for root in rs.roots():
            self.pieces.setdefault(self.degree_of(root), []).append(root)
        self.pieces.setdefault(0, [])
        for degree in self.pieces:
            self.pieces[degree].sort()

        transpose_cartan = RatMatrix([[rs.cartan_matrix[j][i] for j in range(rs.rank)] for i in range(rs.rank)])
        zeta = exact_linalg.solve_linear(transpose_cartan, RatMatrix.column(list(self.labels)))
        if zeta is None:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='singular_cartan_matrix')
        self.zeta: Final[RatMatrix] = zeta

        self.gamma: Optional[Root] = None
        self.B_gamma_gamma: Optional[Fraction] = None
        self.B_zeta_zeta: Optional[Fraction] = None
        if self.pieces.get(1):
            self._initialize_toledo_data()
        self.print(f'degree dimensions {self.degree_dims()}')

    def _validate_parameters(self, rs: RootSystem, labels: Sequence[int], form_scale):
        if len(labels) != rs.rank:
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter='labels', cause=f'must_have_{rs.rank}_entries')
        for label in labels:
            if isinstance(label, bool) or int(label) != label or label < 0:
                raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                            parameter='labels', cause='must_be_nonnegative_integers')
        if all(label == 0 for label in labels):
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter='labels', cause='empty_g1')
        if to_rational(form_scale) <= 0:
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter='form_scale', cause='must_be_positive')

    def _initialize_toledo_data(self):
        degree_one = self.pieces[1]
        lengths = {root: self.rs.root_inner_product(root, root) for root in degree_one}
        longest = max(lengths.values())
        candidates = sorted(root for root in degree_one if lengths[root] == longest)
        self.gamma = candidates[0]
        self.B_gamma_gamma = self.rs.dual_norm(self.gamma, self.form_scale)
        for root in candidates[1:]:
            if self.rs.dual_norm(root, self.form_scale) != self.B_gamma_gamma:
                raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='gamma_norm_not_unique')
        self.B_zeta_zeta = self.cartan_form(self.zeta, self.zeta)

    # ----------------------------------------------------------------------------------------------------------------------#

    def degree_of(self, root: Sequence[int]) -> int:
        return sum(value * label for value, label in zip(root, self.labels))

    def roots_of_degree(self, degree: int) -> List[Root]:
        return list(self.pieces.get(degree, []))

    def dim(self, degree: int) -> int:
        count = len(self.pieces.get(degree, []))
        return count + self.rs.rank if degree == 0 else count

    def degree_dims(self) -> Dict[int, int]:
        return {degree: self.dim(degree) for degree in sorted(self.pieces)}

    @property
    def max_degree(self) -> int:
        return max(self.pieces)

    @property
    def is_three_term(self) -> bool:
        """``𝔤 = 𝔤_{−1} ⊕ 𝔤_0 ⊕ 𝔤_1``, the Hermitian case."""
        return self.max_degree == 1

    @property
    def has_toledo_data(self) -> bool:
        return self.gamma is not None

    @property
    def toledo_character(self) -> ToledoCharacter:
        self._require_toledo_data()
        return ToledoCharacter(zeta=self.zeta, normalization=self.B_gamma_gamma)

    def _require_toledo_data(self):
        if not self.has_toledo_data:
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter='labels', cause='empty_g1')

    def cartan_form(self, first: RatMatrix, second: RatMatrix) -> Fraction:
        """``B(x, y)`` for Cartan elements given in coroot coordinates."""
        killing = self.rs.killing_on_cartan()
        return (first.transpose() @ killing @ second)[0, 0] * self.form_scale

    def toledo_character_on(self, x: Sequence) -> Fraction:
        """``χ_T(x) = B(ζ, x)·B(γ, γ)`` for ``x`` in coroot coordinates."""
        self._require_toledo_data()
        vector = x if isinstance(x, RatMatrix) else RatMatrix.column([to_rational(value) for value in x])
        if vector.shape != (self.rs.rank, 1):
            raise InvalidParameterValue(module=self._MODULE_NAME, name=self.name,
                                        parameter='x', cause='length_must_equal_rank')
        return self.cartan_form(self.zeta, vector) * self.B_gamma_gamma

    @property
    def jm_regular_rank(self) -> Fraction:
        """``B(γ, γ)·B(ζ, ζ)``, equal to the phvs Toledo rank when the grading is JM-regular."""
        self._require_toledo_data()
        return self.B_gamma_gamma * self.B_zeta_zeta

    def parity_real_form_dims(self) -> ParityRealForm:
        dims = self.degree_dims()
        dim_h = sum(value for degree, value in dims.items() if degree % 2 == 0)
        dim_m = sum(value for degree, value in dims.items() if degree % 2 != 0)
        if dim_h + dim_m != self.rs.dimension:
            raise InternalInconsistency(module=self._MODULE_NAME, name=self.name, cause='dimension_mismatch')
        return ParityRealForm(dim_h=dim_h, dim_m=dim_m,
                              period_domain_dim=sum(value for degree, value in dims.items() if degree > 0))

    def with_form_scale(self, form_scale: Fraction) -> Grading:
        return Grading(self.rs, self.labels, form_scale)


def make_grading(rs: RootSystem, labels: Sequence[int], form_scale: Fraction = Fraction(1)) -> Grading:
    """Grading with nonempty ``𝔤_1``.

    :raises InvalidParameterValue: With cause ``empty_g1`` when no root has degree one.
    """
    grading = Grading(rs, labels, form_scale)
    grading._require_toledo_data()
    return grading


def canonical_parabolic_grading(rs: RootSystem, theta: Sequence[int]) -> Grading:
    """Grading of the parabolic ``𝔭_Θ``: label 0 on the nodes of ``Θ`` (1 based) and 1 elsewhere."""
    nodes = set(theta)
    if any(node < 1 or node > rs.rank for node in nodes):
        raise InvalidParameterValue(module=Grading._MODULE_NAME, name=str(rs.lie_type),
                                    parameter='theta', cause=f'nodes_must_be_in_1_{rs.rank}')
    return make_grading(rs, [0 if node in nodes else 1 for node in range(1, rs.rank + 1)])


def parity_real_form_dims(grading: Grading) -> ParityRealForm:
    return grading.parity_real_form_dims()


def toledo_character_on(grading: Grading, x: Sequence) -> Fraction:
    return grading.toledo_character_on(x)
