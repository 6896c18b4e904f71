"""Plain-dict and text renderings of classifications and invariants."""
from __future__ import annotations

import json
from math import gcd

from .classifier import (
    AdjacentCount,
    GcdExceedsTwo,
    KqForm,
    NotHyperbolic,
    TorusLink,
    Undetermined,
    classify,
)
from .errors import NotApplicable
from .formulas import (
    pairwise_linking_number,
    parallel_linking_number,
    twist_region_split,
)
from .params import TorusLinkParams, TwistedTorusParams, normalize, to_t_link


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ": "))


def torus_dict(t: TorusLinkParams) -> dict:
    return {"a": t.a, "b": t.b, "trivial": t.is_trivial}


def obstruction_dict(o) -> dict:
    out = {"kind": o.kind}
    if isinstance(o, GcdExceedsTwo):
        out["d"] = o.d
    elif isinstance(o, AdjacentCount):
        out["side"] = str(o.side)
        out["companion"] = torus_dict(o.companion)
    elif isinstance(o, KqForm):
        out["k"] = o.data.k
        out["torus_core"] = torus_dict(o.data.torus_core)
        out["cabled_component"] = torus_dict(o.data.cabled_component)
    return out


def classification_dict(v) -> dict:
    return {
        "verdict": v.kind,
        "torus_link": torus_dict(v.link) if isinstance(v, TorusLink) else None,
        "obstruction": obstruction_dict(v.obstruction) if isinstance(v, NotHyperbolic) else None,
        "also": [obstruction_dict(o) for o in v.also] if isinstance(v, NotHyperbolic) else [],
        "reason": v.reason.value if isinstance(v, Undetermined) else None,
    }


def params_dict(params: TwistedTorusParams) -> dict:
    return {"p": params.p, "q": params.q, "r": params.r, "s": params.s}


def describe_obstruction(o) -> str:
    if isinstance(o, GcdExceedsTwo):
        return f"gcd(p, q) = {o.d} > 2"
    if isinstance(o, AdjacentCount):
        return f"r = {o.side}, companion {o.companion}" + (" (trivial)" if o.companion.is_trivial else "")
    if isinstance(o, KqForm):
        return (f"r = kq +- 1 with k = {o.k}, core {o.data.torus_core}, "
                f"cable {o.data.cabled_component}")
    return "gcd(p, q) = 2 and r even"


def describe(v) -> str:
    if isinstance(v, TorusLink):
        return f"TorusLink {v.link}"
    if isinstance(v, NotHyperbolic):
        return f"NotHyperbolic {v.obstruction.kind}: {describe_obstruction(v.obstruction)}"
    if isinstance(v, Undetermined):
        return f"Undetermined {v.reason.value}"
    return "Hyperbolic"


def classify_report(params: TwistedTorusParams) -> dict:
    form = normalize(params)
    if form.is_torus_link:
        normal = {"kind": "torus-link", **torus_dict(form.value)}
    else:
        normal = {"kind": "twisted-torus", **params_dict(form.value)}
    return {
        "input": params_dict(params),
        "normal_form": normal,
        "rewrites": [w.value for w in form.rewrites],
        "classification": classification_dict(classify(params)),
    }


def classify_text(params: TwistedTorusParams) -> str:
    form = normalize(params)
    v = classify(params)
    lines = [describe(v)]
    if form.rewrites:
        lines.append(f"normalized: {form.value} via {', '.join(w.value for w in form.rewrites)}")
    if isinstance(v, NotHyperbolic):
        lines.extend(f"also: {o.kind}: {describe_obstruction(o)}" for o in v.also)
    return "\n".join(lines)


def invariants_report(params: TwistedTorusParams) -> dict:
    # oriented p >= q; the Lemma-style linking formula is not symmetric for d >= 3
    p, q = max(params.p, params.q), min(params.p, params.q)
    r, d = params.r, gcd(params.p, params.q)
    out = {
        "input": params_dict(params),
        "components": d,
        "linking_number": None,
        "linking_number_parallel": None,
        "linking_discrepancy": False,
        "twist_region_split": None,
        "t_link": None,
        "companions": None,
        "note": None,
    }
    if d == 1:
        out["note"] = "gcd(p, q) = 1: a twisted torus knot, outside the link classification"
    else:
        lk = int(pairwise_linking_number(p, q))
        par = parallel_linking_number(p, q)
        out["linking_number"] = lk
        out["linking_number_parallel"] = par
        out["linking_discrepancy"] = lk != par
    if d == 2 and r % 2 == 1:
        out["twist_region_split"] = list(twist_region_split(p, q, r).as_tuple())
    try:
        out["t_link"] = str(to_t_link(params))
    except NotApplicable:
        pass
    v = classify(params)
    if isinstance(v, NotHyperbolic):
        comps = {}
        for o in (v.obstruction,) + v.also:
            if isinstance(o, AdjacentCount):
                comps["adjacent"] = torus_dict(o.companion)
            elif isinstance(o, KqForm):
                comps["k"] = o.k
                comps["torus_core"] = torus_dict(o.data.torus_core)
                comps["cabled_component"] = torus_dict(o.data.cabled_component)
        out["companions"] = comps or None
    return out


def invariants_text(params: TwistedTorusParams) -> str:
    inv = invariants_report(params)
    lines = [str(params), f"components: {inv['components']}"]
    if inv["note"]:
        lines.append(f"note: {inv['note']}")
    if inv["linking_number"] is not None:
        line = f"linking number: {inv['linking_number']}"
        if inv["linking_discrepancy"]:
            line += (f" (formula (p/d)(q - q/d); parallel-curve count gives "
                     f"{inv['linking_number_parallel']})")
        lines.append(line)
    if inv["twist_region_split"]:
        r1, r2 = inv["twist_region_split"]
        lines.append(f"twist-region split: ({r1},{r2})")
    if inv["t_link"]:
        lines.append(f"T-link: {inv['t_link']}")
    comps = inv["companions"] or {}
    if "adjacent" in comps:
        a = comps["adjacent"]
        lines.append(f"companion: T({a['a']},{a['b']})")
    if "torus_core" in comps:
        c, cab = comps["torus_core"], comps["cabled_component"]
        lines.append(f"core: T({c['a']},{c['b']}), cable: T({cab['a']},{cab['b']})")
    return "\n".join(lines)
