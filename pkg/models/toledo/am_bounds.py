from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Final, Tuple

from models.algebra.rational_matrix import to_rational
from models.exception.invalid_parameter_value import InvalidParameterValue
from models.exception.unsupported_operation import UnsupportedOperation
from models.orbit.so_orbit_label import SOOrbitLabel

_MODULE_NAME: Final[str] = 'models.toledo.am_bounds'


@dataclass(frozen=True)
class AMBounds:
    """Arakelov–Milnor bounds on the Toledo invariant of an ``α``-semistable pair with ``α = λζ``:
    ``−rk(φ)(2g−2) + λ(B(γ,γ)B(ζ,ζ) − rk(φ)) ≤ τ ≤ λB(γ,γ)B(ζ,ζ)``.
    """
    genus: int
    lambda_: Fraction
    lower: Fraction
    upper: Fraction
    maximal_toledo: Fraction


def _check(genus: int, rank: Fraction, name: str):
    if type(genus) is not int or genus < 2:
        raise InvalidParameterValue(module=_MODULE_NAME, name=name, parameter='genus', cause='must_be_at_least_2')
    if rank < 0:
        raise InvalidParameterValue(module=_MODULE_NAME, name=name, parameter='rk_T', cause='must_be_nonnegative')


def am_bounds(rk_T_phi, Bgg_Bzz, genus: int, lambda_=Fraction(0), rk_T_phvs=None) -> AMBounds:
    """
    :param rk_T_phi: Toledo rank of the Higgs field.
    :param Bgg_Bzz: ``B(γ,γ)·B(ζ,ζ)``.
    :param genus: Genus of the curve, at least 2.
    :param lambda_: The stability parameter ``λ``.
    :param rk_T_phvs: Toledo rank of the phvs; defaults to ``rk_T_phi``. Only used for ``maximal_toledo``.

    :raises InvalidParameterValue: For genus below 2 or a negative rank.
    """
    rank = to_rational(rk_T_phi)
    product = to_rational(Bgg_Bzz)
    lam = to_rational(lambda_)
    top = rank if rk_T_phvs is None else to_rational(rk_T_phvs)
    _check(genus, rank, 'am_bounds')
    _check(genus, top, 'am_bounds')
    euler = 2 * genus - 2
    return AMBounds(genus=genus, lambda_=lam,
                    lower=-rank * euler + lam * (product - rank),
                    upper=lam * product,
                    maximal_toledo=-top * euler)


def am_bounds_jm_regular(rk_T_phi, rk_T_phvs, genus: int, lambda_=Fraction(0)) -> AMBounds:
    """For JM-regular pairs ``B(γ,γ)B(ζ,ζ) = rk_T(G_0, 𝔤_1)``."""
    return am_bounds(rk_T_phi, rk_T_phvs, genus, lambda_, rk_T_phvs)


def toledo_range(rk_T_phvs, genus: int) -> Tuple[Fraction, Fraction]:
    """Interval of Toledo invariants allowed at ``λ = 0``: ``[−rk_T(G_0,𝔤_1)(2g−2), 0]``."""
    bounds = am_bounds(rk_T_phvs, 0, genus)
    return bounds.maximal_toledo, bounds.upper


def toledo_invariant_so(p: int, q: int, deg_v: int) -> Fraction:
    """``τ = 2·deg V`` for ``(GL_p × SO_q, Hom(ℂ^p, ℂ^q))`` pairs with ``q > 1``.

    :raises UnsupportedOperation: For ``q ≤ 1``, where the normalization differs.
    """
    if q <= 1:
        raise UnsupportedOperation(module=_MODULE_NAME, name=f'so{2 * p + q}', cause='q_must_be_greater_than_1')
    return Fraction(2 * int(deg_v))


def so_degree_bound(label: SOOrbitLabel, genus: int) -> Fraction:
    """Lower bound ``deg V ≥ −(r1 + r2/2)(2g−2)`` for a Higgs field in the orbit ``label`` (``λ = 0``)."""
    bounds = am_bounds(label.toledo_rank, 0, genus)
    return bounds.lower / 2
