"""
Census sweeps over parameter grids, optionally cross-checked by the braid
oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

from .braids import closure_analysis, strand_counts, twisted_torus_braid
from .classifier import AdjacentCount, GeometricClassification, KqForm, NotHyperbolic, classify
from .formulas import expected_linking_matrix, twist_region_split, twist_strand_counts
from .params import TwistedTorusParams
from .report import classification_dict, params_dict

CSV_HEADER = ("p", "q", "r", "s", "verdict", "obstruction", "k", "companion_a",
              "companion_b", "check_components", "check_linking", "check_split")


@dataclass(frozen=True)
class CensusConfig:
    p_max: int = 8
    q_max: int = 8
    s_values: tuple[int, ...] = (4,)
    verify: bool = False

    def __post_init__(self):
        if self.p_max < 2 or self.q_max < 2:
            raise ValueError("p_max and q_max must be >= 2")
        if not self.s_values:
            raise ValueError("s_values is empty")
        if 0 in self.s_values:
            raise ValueError("census twists must be nonzero")

    def grid(self) -> Iterator[TwistedTorusParams]:
        """Tuples with 2 <= q <= p, in sorted (p, q, r, s) order."""
        for p in range(2, self.p_max + 1):
            for q in range(2, min(p, self.q_max) + 1):
                for r in range(2, p + q + 1):
                    for s in sorted(set(self.s_values)):
                        yield TwistedTorusParams(p, q, r, s)


@dataclass(frozen=True)
class OracleChecks:
    components: bool
    linking: bool
    split: bool

    @property
    def ok(self) -> bool:
        return self.components and self.linking and self.split


@dataclass(frozen=True)
class CensusRow:
    params: TwistedTorusParams
    verdict: GeometricClassification
    checks: Optional[OracleChecks] = None

    def flat(self) -> dict:
        v = self.verdict
        obstruction, k, companion = "", "", None
        if isinstance(v, NotHyperbolic):
            o = v.obstruction
            obstruction = o.kind
            if isinstance(o, AdjacentCount):
                companion = o.companion
            elif isinstance(o, KqForm):
                k = o.k
                companion = o.data.cabled_component
        checks = self.checks
        return {
            **params_dict(self.params),
            "verdict": v.kind,
            "obstruction": obstruction,
            "k": k,
            "companion_a": companion.a if companion else "",
            "companion_b": companion.b if companion else "",
            "check_components": "" if checks is None else str(checks.components).lower(),
            "check_linking": "" if checks is None else str(checks.linking).lower(),
            "check_split": "" if checks is None else str(checks.split).lower(),
        }

    def to_dict(self) -> dict:
        checks = None
        if self.checks is not None:
            checks = {"components": self.checks.components,
                      "linking": self.checks.linking,
                      "split": self.checks.split}
        return {**params_dict(self.params),
                "classification": classification_dict(self.verdict),
                "checks": checks}


def oracle_applicable(params: TwistedTorusParams) -> bool:
    return params.r <= params.p and gcd(params.p, params.q) >= 2


def oracle_checks(params: TwistedTorusParams) -> OracleChecks:
    """
    Compare the closed diagram of ``params`` against the formulas: component
    count, the full linking matrix, and the per-component count of twisted
    strands (the odd-r two-component split where that applies).
    """
    p, q, r, s = params.p, params.q, params.r, params.s
    d = gcd(p, q)
    summary = closure_analysis(twisted_torus_braid(params))
    components = summary.component_count == d
    linking = components and summary.linking_matrix == expected_linking_matrix(p, q, r, s)
    counts = strand_counts(summary, r) if components else None
    if d == 2 and r % 2 == 1:
        expected = twist_region_split(p, q, r).as_tuple()
    else:
        expected = tuple(sorted(twist_strand_counts(p, q, r), reverse=True))
    return OracleChecks(components, linking, counts == expected)


def census_row(params: TwistedTorusParams, verify: bool = False) -> CensusRow:
    checks = oracle_checks(params) if verify and oracle_applicable(params) else None
    return CensusRow(params, classify(params), checks)


def run_census(config: CensusConfig) -> Iterator[CensusRow]:
    for params in config.grid():
        yield census_row(params, config.verify)
