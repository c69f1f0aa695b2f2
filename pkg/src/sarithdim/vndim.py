"""Von Neumann dimensions of discrete-series modules over S-arithmetic groups.

The engine is the lattice formula: dimension = covolume * formal degree.
For a finite group the dimension is dim_C(H) / |Gamma|.  Group variants are
linked by index transfer: passing from PGL(2, O_S) to the index-2^|S|
subgroup PSL(2, O_S) multiplies the dimension by 2^|S|, and pushing down
along SL -> SL/{+-1} = PSL halves it (every module in scope has trivial
central character).  Headline values are computed by two routes and
returned only on exact agreement.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .covolume import pgl2_covolume
from .errors import DatumPlaceMismatch, InternalInconsistency, MissingDatum, OddCardinality
from .formal_degree import LocalRepDatum, jl_degree_ratio, steinberg_global_degree
from .numberfield import NumberField, SSet
from .quaternion import zeta_D_leading_ratio_at_zero
from .zeta import zeta_F_minus1


class GroupVariant(Enum):
    PGL = "pgl"
    PSL = "psl"
    SL = "sl"
    FINITE_GROUP = "finite"


class Route(Enum):
    CLOSED_FORM = "closed_form"
    COVOLUME_TIMES_DEGREE = "covolume_times_degree"
    INDEX_TRANSFER = "index_transfer"


@dataclass(frozen=True)
class VnDimension:
    group_variant: GroupVariant
    field: NumberField
    S: SSet
    value: Fraction
    route: Route


def _coerce_group(group) -> GroupVariant:
    if isinstance(group, GroupVariant):
        return group
    return GroupVariant(str(group).lower())


def atiyah_schmid_dim(covolume, formal_degree) -> Fraction:
    """Dimension of a square-integrable module over the lattice's algebra:
    covolume times formal degree."""
    covolume = Fraction(covolume)
    formal_degree = Fraction(formal_degree)
    if covolume <= 0:
        raise ValueError("covolume must be positive")
    if formal_degree < 0:
        raise ValueError("formal degree must be >= 0")
    return covolume * formal_degree


def vn_dim_finite_group(dim_C: int, group_order: int) -> Fraction:
    """Dimension over the algebra of a finite group: dim_C / order."""
    if group_order < 1:
        raise ValueError("group order must be >= 1")
    return Fraction(dim_C, group_order)


def _steinberg_pgl_closed_form(F: NumberField, S: SSet) -> Fraction:
    z = abs(zeta_F_minus1(F).value)
    return 2 * z * Fraction(math.prod(v.q - 1 for v in S.finite_places), 2**S.size)


def steinberg_vn_dim(F: NumberField, S: SSet, group) -> VnDimension:
    """Dimension of the Steinberg module over the chosen group's algebra.

    The PGL value is the closed form 2 |zeta_F(-1)| 2^(-|S|) prod (q_v - 1),
    independently recomputed as covolume * global formal degree; PSL and SL
    are reached from it by index transfer.
    """
    group = _coerce_group(group)
    closed = _steinberg_pgl_closed_form(F, S)
    via_covolume = atiyah_schmid_dim(pgl2_covolume(F, S).value, steinberg_global_degree(F, S))
    if closed != via_covolume:
        raise InternalInconsistency(
            f"Steinberg dimension routes disagree on {S}: closed form {closed}, covolume route {via_covolume}"
        )
    if group is GroupVariant.PGL:
        return VnDimension(group, F, S, closed, Route.CLOSED_FORM)
    psl = 2**S.size * closed
    if group is GroupVariant.PSL:
        return VnDimension(group, F, S, psl, Route.INDEX_TRANSFER)
    if group is GroupVariant.SL:
        return VnDimension(group, F, S, psl / 2, Route.INDEX_TRANSFER)
    raise ValueError(f"no Steinberg module over {group}")


def module_vn_dim(F: NumberField, S: SSet, group, local: list[LocalRepDatum]) -> VnDimension:
    """Dimension of the module with the given local data, one datum per place.

    Equals the Steinberg dimension scaled by the product of the local
    degree ratios.
    """
    base = steinberg_vn_dim(F, S, group)
    unmatched = list(S.places)
    scale = 1
    for datum in local:
        if datum.place not in unmatched:
            raise DatumPlaceMismatch(f"{datum.place} is not an unmatched place of {S}")
        unmatched.remove(datum.place)
        scale *= jl_degree_ratio(datum)
    if unmatched:
        raise MissingDatum(f"no local datum for {', '.join(str(v) for v in unmatched)}")
    return VnDimension(base.group_variant, F, S, base.value * scale, base.route)


def _require_even(S: SSet) -> None:
    if S.size % 2:
        raise OddCardinality(f"|S| = {S.size} is odd; ramification sets of quaternion algebras have even size")


def jl_ratio_sl(F: NumberField, S: SSet) -> Fraction:
    """The SL-side dimension ratio |zeta_D(0)/zeta_F(0)| for the quaternion
    algebra ramified exactly at S: |zeta_F(-1)| * prod (q_v - 1)."""
    _require_even(S)
    z = abs(zeta_F_minus1(F).value)
    return z * math.prod(v.q - 1 for v in S.finite_places)


def jl_ratio_pgl(F: NumberField, S: SSet, pd_order: int | None = None) -> Fraction:
    """The PGL-side dimension ratio 2 |zeta_F(-1)| N 2^(-|S|) prod (q_v - 1),
    where N is the order of the finite S-unit group on the quaternion side.

    With ``pd_order`` omitted the coefficient (N = 1) is returned; callers
    multiply by the group order once they know it.
    """
    _require_even(S)
    if pd_order is not None and pd_order < 1:
        raise ValueError("pd_order must be >= 1")
    z = abs(zeta_F_minus1(F).value)
    n_factor = pd_order if pd_order is not None else 1
    return 2 * z * n_factor * Fraction(math.prod(v.q - 1 for v in S.finite_places), 2**S.size)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str


@dataclass(frozen=True)
class IdentityReport:
    field: NumberField
    S: SSet
    checks: tuple[IdentityCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.status != "fail" for c in self.checks)


def _compare(name: str, lhs: Fraction, rhs: Fraction, detail: str) -> IdentityCheck:
    status = "pass" if lhs == rhs else "fail"
    return IdentityCheck(name, status, f"{detail}: {lhs} vs {rhs}")


def check_identities(F: NumberField, S: SSet) -> IdentityReport:
    """Run the cross-route identity suite at one (field, S) point.

    Odd-|S| points skip the quaternion-side checks instead of failing.
    """
    checks = []
    closed = _steinberg_pgl_closed_form(F, S)
    via_cov = atiyah_schmid_dim(pgl2_covolume(F, S).value, steinberg_global_degree(F, S))
    checks.append(_compare("pgl_two_routes", via_cov, closed, "covolume*degree vs closed form"))

    pgl = VnDimension(GroupVariant.PGL, F, S, closed, Route.CLOSED_FORM)
    psl = steinberg_vn_dim(F, S, GroupVariant.PSL)
    sl = steinberg_vn_dim(F, S, GroupVariant.SL)
    checks.append(_compare("psl_transfer", psl.value, 2**S.size * pgl.value, "PSL vs 2^|S| * PGL"))
    checks.append(_compare("sl_transfer", sl.value, psl.value / 2, "SL vs PSL/2"))

    if S.size % 2 == 0:
        ratio_sl = jl_ratio_sl(F, S)
        checks.append(
            _compare(
                "sl_quaternion_zeta_match",
                ratio_sl,
                zeta_D_leading_ratio_at_zero(F, S),
                "SL ratio vs zeta_D factorization route",
            )
        )
        checks.append(_compare("sl_steinberg_match", ratio_sl, sl.value, "SL ratio vs Steinberg SL dimension"))
        checks.append(
            _compare(
                "pgl_sl_transfer",
                jl_ratio_pgl(F, S) * 2**S.size / 2,
                ratio_sl,
                "PGL coefficient * 2^|S| / 2 vs SL ratio",
            )
        )
    else:
        note = f"ODD_CARDINALITY: |S| = {S.size}"
        for name in ("sl_quaternion_zeta_match", "sl_steinberg_match", "pgl_sl_transfer"):
            checks.append(IdentityCheck(name, "skipped", note))

    return IdentityReport(F, S, tuple(checks))
