"""Base fields (Q or a real quadratic field), their places, and S-sets.

A place is an equivalence class of absolute values of the field: each real
embedding gives a real place, each prime ideal a finite place with
ramification index e, inertia degree f and residue cardinality q = p^f.
An S-set is a finite set of places containing every real place; its finite
part determines the ring of S-integers.
"""

import re
from dataclasses import dataclass
from enum import Enum

from .errors import (
    DuplicatePlace,
    InvalidSelector,
    MalformedSpec,
    NotSquarefree,
    NotTotallyReal,
)

_QUADRATIC_RE = re.compile(r"Q\(sqrt (-?\d+)\)")


class FieldKind(Enum):
    RATIONALS = "rationals"
    REAL_QUADRATIC = "real_quadratic"


class PlaceKind(Enum):
    REAL = "real"
    FINITE = "finite"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class NumberField:
    """Q, or the real quadratic field of squarefree radicand d > 1."""

    kind: FieldKind
    d: int | None = None

    def __post_init__(self):
        if self.kind is FieldKind.RATIONALS:
            if self.d is not None:
                raise ValueError("d only applies to real quadratic fields")
            return
        if self.d is None or self.d <= 1:
            raise NotTotallyReal(f"Q(sqrt {self.d}) is not a totally real quadratic field")
        if not is_squarefree(self.d):
            raise NotSquarefree(f"{self.d} is not squarefree")

    @classmethod
    def rationals(cls) -> "NumberField":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def real_quadratic(cls, d: int) -> "NumberField":
        return cls(FieldKind.REAL_QUADRATIC, d)

    @property
    def degree(self) -> int:
        return 1 if self.kind is FieldKind.RATIONALS else 2

    @property
    def discriminant(self) -> int:
        if self.kind is FieldKind.RATIONALS:
            return 1
        return self.d if self.d % 4 == 1 else 4 * self.d

    def __str__(self) -> str:
        return "Q" if self.kind is FieldKind.RATIONALS else f"Q(sqrt {self.d})"


@dataclass(frozen=True)
class Place:
    """One place of a field.

    ``index`` distinguishes the two places over a split prime (and the real
    places of a quadratic field); it carries no arithmetic content.
    """

    kind: PlaceKind
    p: int | None = None
    e: int | None = None
    f: int | None = None
    index: int = 0

    def __post_init__(self):
        if self.kind is PlaceKind.REAL:
            if not (self.p is None and self.e is None and self.f is None):
                raise ValueError("real places carry no p, e, f")
        else:
            if self.p is None or self.e is None or self.f is None:
                raise ValueError("finite places need p, e, f")
            if not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.e < 1 or self.f < 1:
                raise ValueError("e and f must be >= 1")

    @classmethod
    def real(cls, index: int = 0) -> "Place":
        return cls(PlaceKind.REAL, index=index)

    @classmethod
    def finite(cls, p: int, e: int, f: int, index: int = 0) -> "Place":
        return cls(PlaceKind.FINITE, p, e, f, index)

    @property
    def is_real(self) -> bool:
        return self.kind is PlaceKind.REAL

    @property
    def q(self) -> int:
        """Residue cardinality p^f of a finite place."""
        if self.kind is not PlaceKind.FINITE:
            raise ValueError("real places have no residue field")
        return self.p**self.f

    def __str__(self) -> str:
        if self.is_real:
            return f"oo_{self.index}"
        return f"v{self.index}(p={self.p},e={self.e},f={self.f})"


@dataclass(frozen=True)
class SSet:
    """A finite set of places containing every real place of the field."""

    field: NumberField
    finite_places: tuple[Place, ...] = ()

    def __post_init__(self):
        for v in self.finite_places:
            if v.kind is not PlaceKind.FINITE:
                raise ValueError("finite_places must all be finite")
        if len(set(self.finite_places)) != len(self.finite_places):
            raise DuplicatePlace("repeated place in S")

    @property
    def archimedean_count(self) -> int:
        return self.field.degree

    @property
    def real_places(self) -> tuple[Place, ...]:
        return tuple(Place.real(i) for i in range(self.archimedean_count))

    @property
    def places(self) -> tuple[Place, ...]:
        return self.real_places + self.finite_places

    @property
    def size(self) -> int:
        return self.archimedean_count + len(self.finite_places)

    def __str__(self) -> str:
        finite = ",".join(str(v) for v in self.finite_places)
        return f"S({self.field}; oo x{self.archimedean_count}" + (f"; {finite})" if finite else ")")


def parse_field(spec: str) -> NumberField:
    """Parse a field spec: ``Q``, or ``Q(sqrt <d>)`` with d squarefree and > 1."""
    text = spec.strip()
    if text == "Q":
        return NumberField.rationals()
    m = _QUADRATIC_RE.fullmatch(text)
    if m is None:
        raise MalformedSpec(f"cannot parse field spec {spec!r}: expected 'Q' or 'Q(sqrt <d>)'")
    return NumberField.real_quadratic(int(m.group(1)))


def kronecker_symbol(D: int, p: int) -> int:
    """Kronecker symbol (D/p) at a prime p, for D a fundamental discriminant or 1.

    0 when p | D.  For odd p, +1 exactly when D is a nonzero square mod p.
    For p = 2 (and D odd, hence D = 1 mod 4) the class of D mod 8 decides:
    +1 for D = 1, -1 for D = 5.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if D % p == 0:
        return 0
    if p == 2:
        return 1 if D % 8 == 1 else -1
    return 1 if pow(D % p, (p - 1) // 2, p) == 1 else -1


def decompose_prime(F: NumberField, p: int) -> list[Place]:
    """The places of F above the rational prime p.

    The returned places always satisfy sum(e*f) = degree(F).  Over a split
    prime the two places differ only by ``index``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if F.kind is FieldKind.RATIONALS:
        return [Place.finite(p, 1, 1)]
    sym = kronecker_symbol(F.discriminant, p)
    if sym == 0:
        return [Place.finite(p, 2, 1)]
    if sym == 1:
        return [Place.finite(p, 1, 1, index=0), Place.finite(p, 1, 1, index=1)]
    return [Place.finite(p, 1, 2)]


def build_S(F: NumberField, finite_primes) -> SSet:
    """Assemble an S-set from (prime, selector) pairs.

    All real places are included automatically.  Each entry is a prime or a
    (prime, selector) pair; selector ``"one"`` (the default) picks a single
    place over the prime, ``"both"`` picks both places over a split prime.
    """
    seen: set[int] = set()
    chosen: list[Place] = []
    for entry in finite_primes:
        p, selector = entry if isinstance(entry, tuple) else (entry, "one")
        if p in seen:
            raise DuplicatePlace(f"prime {p} listed twice")
        seen.add(p)
        places = decompose_prime(F, p)
        if selector == "both":
            if len(places) != 2:
                raise InvalidSelector(f"'both' requires a split prime, but {p} is not split in {F}")
            chosen.extend(places)
        elif selector in (None, "one"):
            chosen.append(places[0])
        else:
            raise InvalidSelector(f"unknown place selector {selector!r}")
    return SSet(F, tuple(chosen))


def delta_2(S: SSet) -> int:
    """Sum of e*f over the finite places of S with residue characteristic 2."""
    return sum(v.e * v.f for v in S.finite_places if v.p == 2)
