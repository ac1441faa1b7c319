"""Divisor-class arithmetic on the ruled surfaces X_e.

Classes aC0 + bf on X_e carry the intersection pairing C0^2 = -e,
C0.f = 1, f^2 = 0.  The split machinery produces certificates that a
class with genus >= 2 degenerates to a union of two smooth irreducible
curves meeting in >= 3 points (a singular stable curve); the three
constructions tried first are the canonical ones (section + residual,
minimal-section multiples, section + comb), then a bounded exhaustive
search.  Cone bookkeeping (degree decompositions and pushforward
section counts on an elliptic base) lives here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional


@dataclass(frozen=True)
class DivisorClass:
    """The class a*C0 + b*f on X_e; classes combine only for equal e."""

    a: int
    b: int
    e: int

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0 or self.e < 0:
            raise ValueError(f"coefficients and e must be >= 0, got {self}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if self.e != other.e:
            raise ValueError(f"surface mismatch: e={self.e} vs e={other.e}")
        return DivisorClass(self.a + other.a, self.b + other.b, self.e)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.e)


@dataclass(frozen=True)
class SplitCertificate:
    """A decomposition D = d1 + d2 witnessing a singular stable degeneration."""

    d1: DivisorClass
    d2: DivisorClass
    intersection: int

    def to_dict(self) -> dict:
        return {
            "d1": list(self.d1.as_tuple()),
            "d2": list(self.d2.as_tuple()),
            "intersection": self.intersection,
        }


class ConeParameters(NamedTuple):
    """d = a*base + eta with eta in {0, 1}: the degree split on a cone."""

    a: int
    eta: int


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number -e*a1*a2 + a1*b2 + a2*b1."""
    if d1.e != d2.e:
        raise ValueError(f"surface mismatch: e={d1.e} vs e={d2.e}")
    return -d1.e * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b


def arith_genus(d: DivisorClass) -> int:
    """Arithmetic genus (a-1)(2b - ae - 2)/2 of a class with a >= 1.

    The product (a-1)(2b-ae-2) is even for all integers, so the division
    is exact.
    """
    if d.a < 1:
        raise ValueError(f"need a >= 1, got {d}")
    return (d.a - 1) * (2 * d.b - d.a * d.e - 2) // 2


def smooth_irreducible_exists(d: DivisorClass) -> bool:
    """Whether aC0 + bf contains a smooth irreducible curve, by the
    sufficient criteria actually used: a fiber (0,1); any section (1,b);
    a >= 2 with e = 0 and b >= 1; or a >= 2 with e >= 1 and b >= ae.
    """
    if d.a == 0:
        return d.b == 1
    if d.a == 1:
        return True
    if d.e == 0:
        return d.b >= 1
    return d.b >= d.a * d.e


def _certificate(d1: DivisorClass, d2: DivisorClass, total: DivisorClass) -> Optional[SplitCertificate]:
    if d1.a + d2.a != total.a or d1.b + d2.b != total.b:
        return None
    if not (smooth_irreducible_exists(d1) and smooth_irreducible_exists(d2)):
        return None
    n = intersect(d1, d2)
    if n < 3:
        return None
    return SplitCertificate(d1, d2, n)


def find_stable_split(d: DivisorClass) -> Optional[SplitCertificate]:
    """Split D into two smooth irreducible classes meeting in >= 3 points.

    Requires a >= 2, genus >= 2 and a smooth irreducible representative.
    Tries, in order: D = (D - f) + f; the minimal-section split
    (1,e) + (a-1)(1,e); the section-plus-comb split (1,0) + (1,b); then
    an exhaustive search over 0 <= a1 <= a, 0 <= b1 <= b in lexicographic
    (a1, b1) order.  Returns None if nothing qualifies.
    """
    if d.a < 2:
        raise ValueError(f"need a >= 2, got {d}")
    if not smooth_irreducible_exists(d):
        raise ValueError(f"no smooth irreducible curve in class {d}")
    if arith_genus(d) < 2:
        raise ValueError(f"genus {arith_genus(d)} below stability threshold")

    canonical = []
    if d.b >= 1:
        canonical.append((DivisorClass(d.a, d.b - 1, d.e), DivisorClass(0, 1, d.e)))
    if d.b == d.a * d.e:
        canonical.append(
            (DivisorClass(1, d.e, d.e), DivisorClass(d.a - 1, (d.a - 1) * d.e, d.e))
        )
    if d.a == 2:
        canonical.append((DivisorClass(1, 0, d.e), DivisorClass(1, d.b, d.e)))
    for d1, d2 in canonical:
        cert = _certificate(d1, d2, d)
        if cert is not None:
            return cert

    for a1 in range(0, d.a + 1):
        for b1 in range(0, d.b + 1):
            d1 = DivisorClass(a1, b1, d.e)
            d2 = DivisorClass(d.a - a1, d.b - b1, d.e)
            cert = _certificate(d1, d2, d)
            if cert is not None:
                return cert
    return None


def cone_parameters(d: int, base: int) -> ConeParameters:
    """Write d = a*base + eta with a >= 1 and eta in {0, 1}.

    This is the degree bookkeeping for a smooth curve on a cone over a
    degree-`base` curve; unique when it exists, otherwise an error.
    """
    if d < 1 or base < 2:
        raise ValueError(f"need d >= 1 and base >= 2, got d={d}, base={base}")
    a, eta = divmod(d, base)
    if eta > 1:
        raise ValueError(f"{d} is not a*{base} or a*{base}+1")
    if a < 1:
        raise ValueError(f"{d} too small for base {base}")
    return ConeParameters(a, eta)


def elliptic_h0(deg: int, trivial: bool) -> int:
    """Sections of a degree-`deg` line bundle on an elliptic curve.

    deg for deg >= 1; at degree 0 the count is 1 exactly for the trivial
    bundle; negative degrees have none.
    """
    if deg >= 1:
        return deg
    if deg == 0 and trivial:
        return 1
    return 0


def cone_pushforward_h0(a: int, deg_m: int, r: int, trivial_indices: set[int]) -> int:
    """Section count sum_{i=0..a} h0(M(-i)) on an elliptic base of degree r.

    M has degree deg_m, each twist M(-i) has degree deg_m - i*r, and
    `trivial_indices` marks the i for which M(-i) is the trivial bundle.
    Comparing the value at a with the value at a-1 detects a base
    component in the corresponding linear system on the cone.
    """
    if a < 1:
        raise ValueError(f"need a >= 1, got {a}")
    if r < 3:
        raise ValueError(f"need r >= 3, got {r}")
    return sum(
        elliptic_h0(deg_m - i * r, i in trivial_indices) for i in range(a + 1)
    )
