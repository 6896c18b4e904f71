"""
Closed-form invariants of torus links and twisted torus links.

Everything here is exact integer or rational arithmetic. The braid-closure
oracle in :mod:`twisted_torus.braids` recomputes the same quantities from a
diagram and the test suite compares the two.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NotALink, NotThisCase, OutOfRange, Unsupported
from .params import TorusLinkParams


@dataclass(frozen=True)
class TwistRegionSplit:
    """
    Linking numbers (r1, r2) of the twisting circle with the two components
    of a two-component torus link, ordered r1 >= r2.
    """
    r1: int
    r2: int

    def __post_init__(self):
        if self.r2 < 1 or self.r1 < self.r2:
            raise OutOfRange(f"need r1 >= r2 >= 1, got ({self.r1}, {self.r2})")
        if self.r % 2 == 1 and self.r1 != self.r2 + 1:
            raise OutOfRange(f"odd r={self.r} must split as (r2 + 1, r2)")

    @property
    def r(self) -> int:
        return self.r1 + self.r2

    def as_tuple(self) -> tuple[int, int]:
        return (self.r1, self.r2)


@dataclass(frozen=True)
class KqCompanionData:
    """
    Payload of the r = kq +- 1 obstruction: the twisting circle becomes the
    knotted torus core T(k, k*s + 1) and one component becomes the cable
    T(q/2, p/2 + k^2 (q/2) s).
    """
    k: int
    torus_core: TorusLinkParams
    cabled_component: TorusLinkParams

    def __post_init__(self):
        if self.k < 1:
            raise OutOfRange(f"k must be >= 1, got {self.k}")
        if gcd(self.torus_core.a, self.torus_core.b) != 1:
            raise OutOfRange(f"torus core {self.torus_core} is not a knot")


def _require_gcd_two(p, q):
    if gcd(p, q) != 2:
        raise Unsupported(f"needs gcd(p, q) = 2, got gcd({p}, {q}) = {gcd(p, q)}")


def pairwise_linking_number(p: int, q: int) -> Fraction:
    """
    Linking number between two components of T(p, q), as (p/d)(q - q/d).

    The value is exact. It matches the diagram count only for d = 2; for
    d >= 3 see :func:`parallel_linking_number`.
    """
    if p < 2 or q < 2:
        raise OutOfRange(f"need p, q >= 2, got ({p}, {q})")
    d = gcd(p, q)
    if d == 1:
        raise NotALink(f"T({p},{q}) is a knot")
    value = Fraction(p, d) * (q - Fraction(q, d))
    assert value.denominator == 1, value
    return value


def parallel_linking_number(p: int, q: int) -> int:
    """
    Linking number between two components of T(p, q) computed from the
    components themselves: each is a (p/d, q/d) curve on the same torus, so
    any two link p*q/d^2 times.
    """
    if p < 2 or q < 2:
        raise OutOfRange(f"need p, q >= 2, got ({p}, {q})")
    d = gcd(p, q)
    if d == 1:
        raise NotALink(f"T({p},{q}) is a knot")
    return (p // d) * (q // d)


def twist_region_split(p: int, q: int, r: int) -> TwistRegionSplit:
    """Split of an odd r between the two components: (ceil(r/2), floor(r/2))."""
    _require_gcd_two(p, q)
    if r % 2 == 0:
        raise Unsupported(f"split is only determined for odd r, got r={r}")
    if r < 2 or r > p + q:
        raise OutOfRange(f"need 1 < r <= p + q, got r={r}")
    return TwistRegionSplit((r + 1) // 2, r // 2)


def twist_strand_counts(p: int, q: int, r: int) -> tuple[int, ...]:
    """
    How many of the r twisted strands belong to each component of T(p, q).

    On the braid (s_1 ... s_{p-1})^q the closure sends position i to
    i + q mod p, so the components are the residue classes of positions
    mod d and r adjacent strands meet them cyclically. Entry c counts
    positions 1..r congruent to c + 1, which is also the component id the
    oracle assigns (components numbered by smallest strand).
    """
    d = gcd(p, q)
    return tuple(r // d + (1 if c < r % d else 0) for c in range(d))


def expected_linking_matrix(p: int, q: int, r: int, s: int) -> tuple[tuple[int, ...], ...]:
    """
    Linking matrix of T(p, q; r, s) for r <= p, components indexed as in
    :func:`twist_strand_counts`. Each pair of components starts with the
    torus-link value and gains s for every pair of twisted strands they
    share, s * n_a * n_b in total.
    """
    d = gcd(p, q)
    if d < 2:
        raise NotALink(f"T({p},{q}) is a knot")
    base = int(pairwise_linking_number(p, q)) if d == 2 else parallel_linking_number(p, q)
    n = twist_strand_counts(p, q, r)
    return tuple(tuple(0 if a == b else base + s * n[a] * n[b] for b in range(d))
                 for a in range(d))


def companion_adjacent(p: int, q: int, s: int) -> TorusLinkParams:
    """
    Companion knot for r = p +- 1: the component linking the twisting
    circle p/2 times becomes T(p/2, q/2 + s*p/2). Check ``.is_trivial`` for
    the degenerate companions (second entry in {-1, 0, 1} or p = 2).
    """
    _require_gcd_two(p, q)
    return TorusLinkParams(p // 2, q // 2 + s * (p // 2))


def kq_multiplier(p: int, q: int, r: int) -> int | None:
    """
    The k >= 1 with r = k*q +- 1, found by scanning the two halves
    (r - 1)/2 and (r + 1)/2 for a positive multiple of q/2. None when
    neither half is one.
    """
    half_q = q // 2
    hits = [h // half_q for h in ((r - 1) // 2, (r + 1) // 2)
            if h > 0 and h % half_q == 0]
    if len(hits) > 1:
        raise NotThisCase(f"both halves of r={r} are multiples of q/2={half_q}")
    return hits[0] if hits else None


def companion_kq(p: int, q: int, r: int, s: int) -> KqCompanionData:
    _require_gcd_two(p, q)
    if r % 2 == 0:
        raise Unsupported(f"needs odd r, got r={r}")
    if q <= 2:
        raise NotThisCase(f"the kq +- 1 case needs q > 2, got q={q}")
    k = kq_multiplier(p, q, r)
    if k is None:
        raise NotThisCase(f"r={r} is not of the form k*{q} +- 1")
    return KqCompanionData(
        k=k,
        torus_core=TorusLinkParams(k, k * s + 1),
        cabled_component=TorusLinkParams(q // 2, p // 2 + k * k * (q // 2) * s),
    )
