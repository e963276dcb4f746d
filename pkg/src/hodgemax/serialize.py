"""JSON encoding of the library's values.

Rationals are written as ``{"num": int, "den": int}`` in lowest terms.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .arakelov import AuditReport, LevelBound
from .core import BaseCurve, GradedHiggsBundle, HodgeComponent, RepObject, TwistedRep
from .structure import BidegreeReport, FeasibilityVerdict, WidthDecomposition

SCHEMA_VERSION = 1


def rational_to_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def rational_from_json(obj) -> Fraction:
    if isinstance(obj, int) and not isinstance(obj, bool):
        return Fraction(obj)
    if obj["den"] <= 0:
        raise ValueError("denominator must be positive")
    return Fraction(obj["num"], obj["den"])


def base_to_json(base: BaseCurve) -> dict:
    return {"genus": base.genus, "punctures": base.punctures}


def base_from_json(obj) -> BaseCurve:
    return BaseCurve(obj["genus"], obj.get("punctures", 0))


def bundle_to_json(bundle: GradedHiggsBundle) -> dict:
    return {
        "weight": bundle.weight,
        "base": base_to_json(bundle.base),
        "self_dual": bundle.self_dual,
        "components": [
            {
                "p": c.p,
                "q": c.q,
                "rank": c.rank,
                "degree": rational_to_json(c.degree),
                "kernel_rank": c.kernel_rank,
            }
            for c in bundle.components
        ],
    }


def bundle_from_json(obj) -> GradedHiggsBundle:
    comps = tuple(
        HodgeComponent(c["p"], c["q"], c["rank"], rational_from_json(c["degree"]),
                       c["kernel_rank"])
        for c in obj["components"]
    )
    return GradedHiggsBundle(obj["weight"], base_from_json(obj["base"]), comps,
                             obj.get("self_dual", True))


def rep_to_json(x: RepObject) -> dict:
    return {
        "terms": [
            {"width": t.width, "twist": t.twist, "multiplicity": t.multiplicity,
             "unitary_rank": t.unitary_rank}
            for t in x.terms
        ]
    }


def rep_from_json(obj) -> RepObject:
    return RepObject(tuple(
        TwistedRep(t["width"], t.get("twist", 0), t.get("multiplicity", 1),
                   t.get("unitary_rank", 1))
        for t in obj["terms"]
    ))


def decomposition_to_json(d: WidthDecomposition) -> dict:
    return {str(w): m for w, m in sorted(d.multiplicities)}


def decomposition_from_json(weight: int, obj) -> WidthDecomposition:
    return WidthDecomposition(weight, {int(w): m for w, m in obj.items()})


def level_to_json(lv: LevelBound) -> dict:
    return {
        "level": lv.level,
        "lhs": rational_to_json(lv.lhs),
        "bound": rational_to_json(lv.bound),
        "slack": rational_to_json(lv.slack),
        "equality_bound": rational_to_json(lv.equality_bound),
    }


def audit_to_json(r: AuditReport) -> dict:
    return {
        "weight": r.weight,
        "log_canonical_degree": r.log_canonical_degree,
        "levels": [level_to_json(lv) for lv in r.levels],
        "dual_levels": [level_to_json(lv) for lv in r.dual_levels],
        "total_lhs": rational_to_json(r.total_lhs),
        "total_bound": rational_to_json(r.total_bound),
        "first_active_level": r.first_active_level,
        "verdict": r.verdict.value,
        "witness_levels": list(r.witness_levels),
        "dual_witness_levels": list(r.dual_witness_levels),
        "predicates": {
            "per_level_equality": r.per_level_equality,
            "total_equality": r.total_equality,
            "kernel_shape": r.kernel_shape,
            "positivity": r.positivity_ok,
        },
        "diagnostics": list(r.diagnostics),
    }


def hodge_numbers_to_json(rows) -> list:
    return [{"p": p, "q": q, "h": h} for p, q, h in rows]


def feasibility_to_json(v: FeasibilityVerdict) -> dict:
    return {"status": v.status.value, "rule": v.rule, "detail": v.detail}


def bidegree_to_json(r: BidegreeReport) -> dict:
    return {
        "weight": r.weight,
        "m": r.m,
        "m_prime": r.m_prime,
        "expected_bidegree": None if r.expected_bidegree is None
        else list(r.expected_bidegree),
        "width_zero_terms": [{"twist": t, "multiplicity": n}
                             for t, n in r.width_zero_terms],
        "width_zero_multiplicity": r.width_zero_multiplicity,
        "ok": r.ok,
    }


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
