from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from models.algebra.rational_matrix import RatMatrix


@dataclass(frozen=True)
class PhvsRank:
    """Toledo rank of ``(G_0, 𝔤_1)`` evaluated at the element found by the open orbit search."""
    rank: Fraction
    certified: bool
    element: RatMatrix


@dataclass(frozen=True)
class MaximalJMSubspace:
    """``ĝ_j = ker ad_s ∩ 𝔤_j`` for ``s = ζ − h/2``, the parabolic ``𝔭_{0,e}`` of ``𝔤_0`` on which ``Ad exp(ts)``
    stays bounded, and the centralizer ``ĉ`` of the triple in ``𝔤_0``. Bases are coordinate vectors.
    """
    s: RatMatrix
    hat_g0_basis: List[RatMatrix]
    hat_g1_basis: List[RatMatrix]
    parabolic_dim: int
    c_hat_dim: int
    hat_orbit_open: bool
    hat_algebra_reductive: bool

    _report_properties = ('hat_dims',)

    @property
    def hat_dims(self) -> Tuple[int, int]:
        return len(self.hat_g0_basis), len(self.hat_g1_basis)


@dataclass(frozen=True)
class RelativeInvariantData:
    """Whether ``B(ζ, ·)`` vanishes on the stabilizer ``𝔤_0^e``, and the degree factor ``tr((h/2)²)`` for the
    unscaled trace form.
    """
    chi_vanishes_on_stabilizer: bool
    degree_over_q: Fraction


@dataclass(frozen=True)
class CurvatureAtTriple:
    """``K_norm = −1/rk_T(e)`` and ``−2/B(ζ, h)`` for the algebra's own form ``B = s·tr``.

    Only ``normalized`` is independent of ``s``; ``raw_at_form_scale`` scales like ``1/s``.
    """
    normalized: Fraction
    raw_at_form_scale: Fraction


@dataclass(frozen=True)
class ToledoReport:
    """Every Toledo quantity of a graded algebra at one element ``e`` of ``𝔤_1``.

    ``form_nondegenerate_on_stabilizer`` is the regularity verdict: the invariant form restricted to the stabilizer
    of ``e`` in ``𝔤_0`` is nondegenerate, a sufficient condition for the stabilizer to be reductive. It is only
    meaningful when ``open_orbit_certified`` is ``True``.
    """
    rk_T_e: Fraction
    rk_T_phvs: Fraction
    B_zeta_zeta_times_Bgg: Fraction
    jm_regular: bool
    s_vector: RatMatrix
    hat_dims: Tuple[int, int]
    parabolic_dim: int
    c_hat_dim: int
    form_nondegenerate_on_stabilizer: Optional[bool]
    open_orbit_certified: bool
    chi_vanishes_on_stabilizer: bool
    degree_over_q: Fraction
    curvature: Optional[CurvatureAtTriple]
    e: RatMatrix
    h: RatMatrix

    _report_properties = ('phvs_regular',)

    @property
    def phvs_regular(self) -> Optional[bool]:
        return self.form_nondegenerate_on_stabilizer
