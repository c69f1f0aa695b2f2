"""Exact covolumes of SL(2, O_S) and PGL(2, O_S) in their S-adelic groups.

Haar measures are frozen once and for all: at a real place the maximal
compact SO(2) gets volume 1, at a finite place the Iwahori subgroup gets
volume 1 (so SL(2, O_v) has volume q_v + 1).  Every constant downstream
assumes exactly this normalization, which is why no measure parameter is
exposed.  With n the field degree, the covolumes are

    SL(2, O_S):   |zeta_F(-1)| / 2^n                      * prod (q_v + 1)
    PGL(2, O_S):  2^(delta_2(S)+1) * |zeta_F(-1)| / 2^(2n) * prod (q_v + 1)

with the products over the finite places of S; both are exact rationals.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .numberfield import NumberField, Place, PlaceKind, SSet, delta_2
from .zeta import zeta_F_minus1


class CovolumeGroup(Enum):
    SL2 = "sl2"
    PGL2 = "pgl2"


@dataclass(frozen=True)
class Covolume:
    group: CovolumeGroup
    field: NumberField
    S: SSet
    value: Fraction


def _finite_part(S: SSet) -> int:
    return math.prod(v.q + 1 for v in S.finite_places)


def sl2_covolume(F: NumberField, S: SSet) -> Covolume:
    """Covolume of SL(2, O_S), exactly."""
    z = abs(zeta_F_minus1(F).value)
    value = z / 2**F.degree * _finite_part(S)
    return Covolume(CovolumeGroup.SL2, F, S, value)


def pgl2_covolume(F: NumberField, S: SSet) -> Covolume:
    """Covolume of PGL(2, O_S), exactly."""
    z = abs(zeta_F_minus1(F).value)
    value = Fraction(2 ** (delta_2(S) + 1), 2 ** (2 * F.degree)) * z * _finite_part(S)
    return Covolume(CovolumeGroup.PGL2, F, S, value)


def pgl_psl_index(F: NumberField, S: SSet) -> int:
    """Index of PSL(2, O_S) in PGL(2, O_S): the square-class count 2^|S|."""
    return 2**S.size


def local_square_class_order(v: Place) -> int:
    """Order of the local square-class group F_v^* / (F_v^*)^2 as used by the
    PGL/PSL index bookkeeping: 2 at a real place, 4 at an odd finite place,
    2^(e*f) at a place of residue characteristic 2.

    Audit-only: the covolume formulas above do not consume these values.
    """
    if v.kind is PlaceKind.REAL:
        return 2
    if v.p != 2:
        return 4
    return 2 ** (v.e * v.f)
