"""
Text encodings of braid closures.

braid-word
    ``"N | i1 i2 ..."``: strand count, a bar, then signed generator indices
    separated by single spaces. The empty word is ``"N |"``.
gauss
    One line per component, entries separated by single spaces. Each entry
    is ``O`` or ``U`` (over/under), the crossing sign ``+`` or ``-``, and the
    1-based crossing id, e.g. ``O+1 U-2``. A component without crossings
    is an empty line.
pd
    One crossing per line as ``X[a,b,c,d]``: a is the incoming under arc and
    the rest follow counterclockwise, so a positive crossing reads
    ``X[under_in, over_out, under_out, over_in]`` and a negative one
    ``X[under_in, over_in, under_out, over_out]``. Crossings are listed in
    word order.

Crossing ids are letter positions in the word, starting at 1. Components are
traversed in order of their smallest strand, each starting at the top of that
strand and following the closure. Arcs are numbered from 1 in that traversal,
one new arc after every crossing passage. Components without crossings have
no arcs and do not appear in PD output.
"""
from __future__ import annotations

from .braids import BraidWord, closure_cycles, crossings

FORMATS = ("braid-word", "gauss", "pd")


def _passages(word):
    """Per component, the ordered list of (crossing, 'O' | 'U') passages."""
    by_strand = {x: [] for x in range(1, word.strands + 1)}
    xs = crossings(word)
    for c in xs:
        by_strand[c.over].append((c, "O"))
        by_strand[c.under].append((c, "U"))
    return [[p for x in cycle for p in by_strand[x]] for cycle in closure_cycles(word)]


def braid_word_text(word: BraidWord) -> str:
    return " ".join([f"{word.strands} |"] + [str(x) for x in word.letters])


def gauss_text(word: BraidWord) -> str:
    lines = []
    for comp in _passages(word):
        lines.append(" ".join(
            f"{role}{'+' if c.sign > 0 else '-'}{c.index + 1}" for c, role in comp))
    return "\n".join(lines)


def pd_code(word: BraidWord) -> list[tuple[int, int, int, int]]:
    arcs = {}  # (crossing index, role) -> (in arc, out arc)
    label = 1
    for comp in _passages(word):
        m = len(comp)
        for j, (c, role) in enumerate(comp):
            arcs[c.index, role] = (label + j, label + (j + 1) % m)
        label += m
    code = []
    for c in crossings(word):
        ui, uo = arcs[c.index, "U"]
        oi, oo = arcs[c.index, "O"]
        code.append((ui, oo, uo, oi) if c.sign > 0 else (ui, oi, uo, oo))
    return code


def pd_text(word: BraidWord) -> str:
    return "\n".join(f"X[{a},{b},{c},{d}]" for a, b, c, d in pd_code(word))


def export_code(word: BraidWord, format: str = "braid-word") -> str:
    if format == "braid-word":
        return braid_word_text(word)
    if format == "gauss":
        return gauss_text(word)
    if format == "pd":
        return pd_text(word)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def parse_braid_word(text: str) -> BraidWord:
    head, sep, tail = text.strip().partition("|")
    if not sep:
        raise ValueError(f"missing '|' in braid word {text!r}")
    return BraidWord(int(head), tuple(int(x) for x in tail.split()))
