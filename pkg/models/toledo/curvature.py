from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Final, List, Sequence

import numpy

from models.algebra.graded_matrix_algebra import GradedMatrixAlgebra, build_classical
from models.algebra.rational_matrix import RatMatrix
from models.exception.internal_inconsistency import InternalInconsistency
from models.exception.invalid_parameter_value import InvalidParameterValue
from models.exception.unsupported_operation import UnsupportedOperation
from models.toledo.toledo_context import ToledoContext

_MODULE_NAME: Final[str] = 'models.toledo.curvature'

# B(γ, γ) of sl_n under the trace form
SL_TRACE_GAMMA_NORM: Final[Fraction] = Fraction(2)


@dataclass(frozen=True)
class CurvatureSample:
    """Holomorphic sectional curvature at ``x`` and the bound ``−1/rk_T`` of the orbit of ``x``."""
    x: RatMatrix
    raw: Fraction
    normalized: Fraction
    toledo_rank: Fraction

    @property
    def upper_bound(self) -> Fraction:
        return -1 / self.toledo_rank


def _square_norm(y: RatMatrix) -> Fraction:
    return y.transpose().trace_pairing(y)


def sl_graded_algebra(size: int, labels: Sequence[int] = None, diagonal: Sequence = None) -> GradedMatrixAlgebra:
    return build_classical('sl', size, labels=labels, diagonal=diagonal)


def curvature_sample(context: ToledoContext, x: RatMatrix) -> CurvatureSample:
    """``K(x) = −|[x, xᵀ]|²/|x|⁴`` with ``|y|² = tr(yᵀy)``, normalized by ``B(γ, γ)``, and checked against
    ``−1 ≤ K_norm(x) ≤ −1/rk_T(x)``.

    :raises UnsupportedOperation: Outside ``sl_n``.
    :raises InvalidParameterValue: If ``x`` is zero or not in ``𝔤_1``.
    :raises InternalInconsistency: If the value leaves the interval.
    """
    alg = context.alg
    if alg.family != 'sl':
        raise UnsupportedOperation(module=_MODULE_NAME, name=alg.name, cause='raw_curvature_is_sl_only')
    context.ga.require_in_piece(x, 1, parameter='x')
    if x.is_zero():
        raise InvalidParameterValue(module=_MODULE_NAME, name=alg.name, parameter='x', cause='must_be_nonzero')
    commutator = x.bracket(x.transpose())
    norm = _square_norm(x)
    raw = -_square_norm(commutator) / (norm * norm)
    normalized = raw / SL_TRACE_GAMMA_NORM
    rank = context.toledo_rank(x)
    if not -1 <= normalized <= -1 / rank:
        raise InternalInconsistency(module=_MODULE_NAME, name=alg.name, cause='curvature_outside_bounds')
    return CurvatureSample(x=x, raw=raw, normalized=normalized, toledo_rank=rank)


def curvature_raw_sl(size: int, labels: Sequence[int], x: RatMatrix) -> Fraction:
    """Normalized holomorphic sectional curvature of the period domain of ``sl_size`` graded by ``labels`` at
    ``x ∈ 𝔤_1``.
    """
    return curvature_sample(ToledoContext(sl_graded_algebra(size, labels)), x).normalized


def random_rational_element(ga: GradedMatrixAlgebra, generator: numpy.random.Generator, degree: int = 1) \
        -> RatMatrix:
    """Nonzero combination of the basis of ``𝔤_degree`` with coefficients ``a/b``, ``|a| ≤ 5`` and ``1 ≤ b ≤ 4``."""
    size = ga.dim(degree)
    while True:
        numerators = generator.integers(-5, 6, size=size)
        denominators = generator.integers(1, 5, size=size)
        coefficients = [Fraction(int(a), int(b)) for a, b in zip(numerators, denominators)]
        if any(coefficients):
            break
    total = RatMatrix.zeros(ga.alg.dimension, 1)
    for coefficient, vector in zip(coefficients, ga.piece(degree)):
        total = total + vector * coefficient
    return ga.alg.element(total)


def sample_curvature(size: int, labels: Sequence[int], seed: int, count: int) -> List[CurvatureSample]:
    """``count`` seeded points of ``𝔤_1``, each verified against the curvature bounds of its orbit."""
    context = ToledoContext(sl_graded_algebra(size, labels))
    generator = numpy.random.default_rng(seed)
    return [curvature_sample(context, random_rational_element(context.ga, generator)) for _ in range(count)]
