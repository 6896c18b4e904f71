"""
Parameter types for twisted torus links and their reductions.

A twisted torus link T(p, q; r, s) is the torus link T(p, q) with s full
twists applied to r adjacent strands. This module validates tuples, puts them
in the canonical orientation p >= q, reduces the degenerate tuples that are
plain torus links, and rewrites positive twisted torus links as T-links.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Union

from .errors import NotApplicable, OutOfRange


def component_count(p: int, q: int) -> int:
    """Number of components of the torus link T(p, q)."""
    return gcd(p, q)


@dataclass(frozen=True)
class TwistedTorusParams:
    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise OutOfRange(f"need p, q >= 2, got p={self.p}, q={self.q}")
        if self.r < 2 or self.r > self.p + self.q:
            raise OutOfRange(
                f"need 2 <= r <= p + q = {self.p + self.q}, got r={self.r}")

    def __str__(self):
        return f"T({self.p},{self.q};{self.r},{self.s})"

    def swapped(self) -> TwistedTorusParams:
        return TwistedTorusParams(self.q, self.p, self.r, self.s)

    @property
    def d(self) -> int:
        return gcd(self.p, self.q)


def new_params(p: int, q: int, r: int, s: int) -> TwistedTorusParams:
    return TwistedTorusParams(p, q, r, s)


@dataclass(frozen=True)
class TorusLinkParams:
    """
    The torus link T(a, b). Negative entries are allowed; they arise as
    companion knots after negative twisting.
    """
    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise OutOfRange("T(0, 0) is not a torus link")

    def __str__(self):
        return f"T({self.a},{self.b})"

    @property
    def component_count(self) -> int:
        return gcd(abs(self.a), abs(self.b))

    @property
    def is_trivial(self) -> bool:
        """True for an unknot or unlink, i.e. min(|a|, |b|) <= 1."""
        return min(abs(self.a), abs(self.b)) <= 1


@dataclass(frozen=True)
class TLinkParams:
    """T-link T((r_1, s_1), ..., (r_k, s_k)): closure of the product of blocks (sigma_1 ... sigma_{r_i - 1})^{s_i}."""
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(r), int(s)) for r, s in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise OutOfRange("a T-link needs at least one pair")
        for r, s in pairs:
            if r < 2 or s < 1:
                raise OutOfRange(f"T-link pair ({r}, {s}) needs r >= 2, s >= 1")
        rs = [r for r, _ in pairs]
        if rs != sorted(rs):
            raise OutOfRange(f"T-link r-values must be nondecreasing, got {rs}")

    def __str__(self):
        return "T(" + ",".join(f"({r},{s})" for r, s in self.pairs) + ")"


class Rewrite(str, enum.Enum):
    SWAP = "swap"
    ZERO_TWIST = "zero-twist"
    R_EQUALS_P = "r-equals-p"
    R_EQUALS_Q = "r-equals-q"


@dataclass(frozen=True)
class NormalForm:
    value: Union[TwistedTorusParams, TorusLinkParams]
    rewrites: tuple[Rewrite, ...] = ()

    @property
    def is_torus_link(self) -> bool:
        return isinstance(self.value, TorusLinkParams)


def normalize(params: TwistedTorusParams) -> NormalForm:
    """
    Canonical form of a twisted torus link.

    The tuple is first oriented so that p >= q (T(p, q; r, s) and
    T(q, p; r, s) are the same link). Then three degenerate cases collapse
    to a torus link:

    * s == 0 leaves T(p, q) untouched;
    * r == p gives T(p, q + r*s);
    * r == q gives T(q, p + r*s), the previous case seen after the swap.
    """
    rewrites = []
    if params.p < params.q:
        params = params.swapped()
        rewrites.append(Rewrite.SWAP)
    p, q, r, s = params.p, params.q, params.r, params.s
    if s == 0:
        rewrites.append(Rewrite.ZERO_TWIST)
        return NormalForm(TorusLinkParams(p, q), tuple(rewrites))
    if r == p:
        rewrites.append(Rewrite.R_EQUALS_P)
        return NormalForm(TorusLinkParams(p, q + r * s), tuple(rewrites))
    if r == q:
        rewrites.append(Rewrite.R_EQUALS_Q)
        return NormalForm(TorusLinkParams(q, p + r * s), tuple(rewrites))
    return NormalForm(params, tuple(rewrites))


def to_t_link(params: TwistedTorusParams) -> TLinkParams:
    """T(p, q; r, s) == T((r, r*s), (p, q)) for s >= 1 and r < p."""
    if params.s <= 0:
        raise NotApplicable(f"T-link form needs s >= 1, got s={params.s}")
    if params.r >= params.p:
        raise NotApplicable(
            f"T-link form needs r < p, got r={params.r}, p={params.p}")
    return TLinkParams(((params.r, params.r * params.s), (params.p, params.q)))
