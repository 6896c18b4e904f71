"""
Geometric classification of twisted torus links.

For |s| >= 4 a twisted torus link T(p, q; r, s) with p >= q and gcd(p, q) > 1
is hyperbolic exactly when gcd(p, q) = 2, r is odd, r is not p - 1, p or
p + 1, and (when q > 2) r is not k*q +- 1. The non-hyperbolic cases hold for
every nonzero s, so only the hyperbolic verdict depends on the twist bound.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd
from typing import Union

from .errors import UnsupportedShape
from .formulas import KqCompanionData, companion_adjacent, companion_kq, kq_multiplier
from .params import (
    TLinkParams,
    TorusLinkParams,
    TwistedTorusParams,
    normalize,
)

#: Smallest |s| for which the hyperbolic verdict is established.
HYPERBOLIC_TWIST_BOUND = 4


# Obstructions ---------------------------------------------------------------

@dataclass(frozen=True)
class GcdExceedsTwo:
    d: int
    kind = "gcd-exceeds-two"


@dataclass(frozen=True)
class EvenTwistRegion:
    kind = "even-twist-region"


class AdjacentSide(enum.IntEnum):
    P_MINUS_1 = -1
    P_PLUS_1 = 1

    def __str__(self):
        return "p-1" if self is AdjacentSide.P_MINUS_1 else "p+1"


@dataclass(frozen=True)
class AdjacentCount:
    side: AdjacentSide
    companion: TorusLinkParams
    kind = "adjacent-count"


@dataclass(frozen=True)
class KqForm:
    data: KqCompanionData
    kind = "kq-form"

    @property
    def k(self) -> int:
        return self.data.k


Obstruction = Union[GcdExceedsTwo, EvenTwistRegion, AdjacentCount, KqForm]


# Verdicts -------------------------------------------------------------------

class UndeterminedReason(str, enum.Enum):
    SMALL_TWIST = "small-twist"
    KNOT_CASE = "knot-case"


@dataclass(frozen=True)
class TorusLink:
    link: TorusLinkParams
    kind = "torus-link"


@dataclass(frozen=True)
class Hyperbolic:
    kind = "hyperbolic"


@dataclass(frozen=True)
class NotHyperbolic:
    """
    ``obstruction`` is the first applicable case in the order gcd > 2,
    even r, r = p +- 1, r = kq +- 1. ``also`` lists any later case that
    applies to the same tuple (only r = p +- 1 and r = kq +- 1 can overlap).
    """
    obstruction: Obstruction
    also: tuple[Obstruction, ...] = field(default=())
    kind = "not-hyperbolic"


@dataclass(frozen=True)
class Undetermined:
    reason: UndeterminedReason
    kind = "undetermined"


GeometricClassification = Union[TorusLink, Hyperbolic, NotHyperbolic, Undetermined]


def _kq_obstruction(p, q, r, s):
    if q <= 2 or r % 2 == 0 or kq_multiplier(p, q, r) is None:
        return None
    return KqForm(companion_kq(p, q, r, s))


def classify(params: TwistedTorusParams) -> GeometricClassification:
    form = normalize(params)
    if form.is_torus_link:
        return TorusLink(form.value)
    p, q, r, s = form.value.p, form.value.q, form.value.r, form.value.s

    d = gcd(p, q)
    if d == 1:
        return Undetermined(UndeterminedReason.KNOT_CASE)
    if d > 2:
        return NotHyperbolic(GcdExceedsTwo(d))
    if r % 2 == 0:
        return NotHyperbolic(EvenTwistRegion())

    kq = _kq_obstruction(p, q, r, s)
    if r in (p - 1, p + 1):
        adjacent = AdjacentCount(AdjacentSide(r - p), companion_adjacent(p, q, s))
        return NotHyperbolic(adjacent, (kq,) if kq else ())
    if kq:
        return NotHyperbolic(kq)

    if abs(s) >= HYPERBOLIC_TWIST_BOUND:
        return Hyperbolic()
    return Undetermined(UndeterminedReason.SMALL_TWIST)


def classify_t_link(t: TLinkParams) -> GeometricClassification:
    """Classify the T-link T((r, r*s), (p, q)) as the twisted torus link T(p, q; r, s)."""
    if len(t.pairs) != 2:
        raise UnsupportedShape(f"expected two pairs ((r, r*s), (p, q)), got {t}")
    (r, m), (p, q) = t.pairs
    if m % r != 0:
        raise UnsupportedShape(f"first block ({r}, {m}): {r} does not divide {m}")
    if r >= p:
        raise UnsupportedShape(f"needs r < p, got r={r}, p={p}")
    return classify(TwistedTorusParams(p, q, r, m // r))
