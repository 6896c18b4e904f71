"""
Braid-closure oracle.

Builds braid words for torus links and twisted torus links and reads off
components, linking numbers and twist-region counts directly from the
closed diagram, without using any of the closed-form formulas.

Conventions: a letter ``i > 0`` is sigma_i, the strand at position i
crossing over the strand at position i + 1 (a positive crossing); ``-i`` is
its inverse. Positions and strand labels are 1-based; a strand is labelled
by its position at the top of the braid. The closure joins bottom position
j to top position j.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import OracleInconsistency, OutOfRange, Unsupported
from .formulas import TwistRegionSplit
from .params import TwistedTorusParams


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 2:
            raise OutOfRange(f"need at least 2 strands, got {self.strands}")
        for x in self.letters:
            if not 1 <= abs(x) <= self.strands - 1:
                raise OutOfRange(
                    f"letter {x} out of range for {self.strands} strands")

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise ValueError("cannot concatenate braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    @property
    def writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)


@dataclass(frozen=True)
class Crossing:
    """One letter of a braid word, resolved to the strands that meet there."""
    index: int
    sign: int
    left: int   # strand entering at position |letter|
    right: int  # strand entering at position |letter| + 1

    @property
    def over(self) -> int:
        return self.left if self.sign > 0 else self.right

    @property
    def under(self) -> int:
        return self.right if self.sign > 0 else self.left


def crossings(word: BraidWord) -> list[Crossing]:
    at = list(range(1, word.strands + 1))  # at[pos - 1] = strand label
    out = []
    for idx, x in enumerate(word.letters):
        i = abs(x) - 1
        out.append(Crossing(idx, 1 if x > 0 else -1, at[i], at[i + 1]))
        at[i], at[i + 1] = at[i + 1], at[i]
    return out


def closure_permutation(word: BraidWord) -> dict[int, int]:
    """Map strand label -> bottom position, i.e. the next strand in the closure."""
    at = list(range(1, word.strands + 1))
    for x in word.letters:
        i = abs(x) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    return {label: pos for pos, label in enumerate(at, start=1)}


def closure_cycles(word: BraidWord) -> list[list[int]]:
    """Cycles of the closure permutation, each starting at its smallest strand."""
    perm = closure_permutation(word)
    seen = set()
    cycles = []
    for start in range(1, word.strands + 1):
        if start in seen:
            continue
        cycle = []
        x = start
        while x not in seen:
            seen.add(x)
            cycle.append(x)
            x = perm[x]
        cycles.append(cycle)
    return cycles


@dataclass(frozen=True)
class LinkingSummary:
    component_of: dict[int, int]
    component_count: int
    linking_matrix: tuple[tuple[int, ...], ...]
    writhe: int

    def linking(self, a: int, b: int) -> int:
        return self.linking_matrix[a][b]

    def off_diagonal(self) -> list[int]:
        n = self.component_count
        return [self.linking_matrix[a][b] for a in range(n) for b in range(a + 1, n)]


def closure_analysis(word: BraidWord) -> LinkingSummary:
    cycles = closure_cycles(word)
    component_of = {x: c for c, cycle in enumerate(cycles) for x in cycle}
    n = len(cycles)
    signed = [[0] * n for _ in range(n)]
    for c in crossings(word):
        a, b = component_of[c.left], component_of[c.right]
        if a != b:
            signed[a][b] += c.sign
            signed[b][a] += c.sign
    for a in range(n):
        for b in range(n):
            if signed[a][b] % 2:
                raise OracleInconsistency(
                    f"odd signed crossing count {signed[a][b]} between "
                    f"components {a} and {b}")
    matrix = tuple(tuple(v // 2 for v in row) for row in signed)
    return LinkingSummary(component_of, n, matrix, word.writhe)


def torus_braid(p: int, q: int) -> BraidWord:
    """(sigma_1 ... sigma_{p-1})^q on p strands."""
    if p < 2 or q < 1:
        raise OutOfRange(f"need p >= 2, q >= 1, got ({p}, {q})")
    return BraidWord(p, tuple(range(1, p)) * q)


def full_twists(strands: int, r: int, s: int) -> BraidWord:
    """s full twists on the first r of ``strands`` strands; negative s uses inverse letters."""
    sign = 1 if s >= 0 else -1
    return BraidWord(strands, tuple(sign * i for i in range(1, r)) * (r * abs(s)))


def twisted_torus_braid(params: TwistedTorusParams) -> BraidWord:
    """
    (sigma_1 ... sigma_{r-1})^{r s} (sigma_1 ... sigma_{p-1})^q on p strands.
    Only defined for r <= p.
    """
    p, q, r, s = params.p, params.q, params.r, params.s
    if r > p:
        raise Unsupported(
            f"no braid form for r > p (r={r}, p={p}); twist region wider than the braid")
    return full_twists(p, r, s) + torus_braid(p, q)


def strand_counts(summary: LinkingSummary, r: int) -> tuple[int, ...]:
    """Strands 1..r counted per component, sorted descending."""
    counts = [0] * summary.component_count
    for x in range(1, r + 1):
        counts[summary.component_of[x]] += 1
    return tuple(sorted(counts, reverse=True))


def twist_region_count(p: int, q: int, r: int) -> TwistRegionSplit:
    """
    Count, on the closure of the torus braid, how many of the strands
    encircled by the twisting circle (positions 1..r at the top of the
    braid) belong to each of the two components.
    """
    if gcd(p, q) != 2:
        raise Unsupported(f"needs gcd(p, q) = 2, got gcd({p}, {q}) = {gcd(p, q)}")
    if r > p:
        raise Unsupported(f"needs r <= p, got r={r}, p={p}")
    r1, r2 = strand_counts(closure_analysis(torus_braid(p, q)), r)
    return TwistRegionSplit(r1, r2)
