"""Arakelov bounds for graded Higgs bundles and the strict-maximality verdict."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    GradedHiggsBundle,
    HodgeError,
    check,
    dual_bundle,
    log_canonical_degree,
)


class LevelOutOfRange(HodgeError):
    pass


class PositivityViolation(HodgeError):
    """A non-zero Higgs field over a base with non-positive log-canonical degree."""


class Verdict(str, enum.Enum):
    ZERO_HIGGS = "ZeroHiggs"
    STRICTLY_MAXIMAL = "StrictlyMaximal"
    NOT_MAXIMAL = "NotMaximal"
    NOT_REALIZABLE = "NotRealizable"


@dataclass(frozen=True)
class LevelBound:
    level: int
    lhs: Fraction
    bound: Fraction
    slack: Fraction
    # bound with the kernel rank set to zero; equality here at every level
    # is the numerical form of strict maximality
    equality_bound: Fraction

    @property
    def is_tight(self) -> bool:
        return self.lhs == self.equality_bound


def level_bound(bundle: GradedHiggsBundle, level: int) -> LevelBound:
    """``deg E^{k-v,v} <= (k-2v)/2 * (h - h_0) * (2g-2+s)`` at ``v = level``.

    On the middle level of an even weight the bound is 0 and the slack is
    ``-deg E^{k/2,k/2}``.
    """
    k = bundle.weight
    if not 0 <= level <= k // 2:
        raise LevelOutOfRange(f"level {level} outside 0..{k // 2}")
    p = k - level
    omega = log_canonical_degree(bundle.base)
    h = bundle.rank(p)
    h0 = bundle.kernel_rank(p)
    factor = Fraction(k - 2 * level, 2) * omega
    lhs = bundle.degree(p)
    bound = factor * (h - h0)
    return LevelBound(level, lhs, bound, bound - lhs, factor * h)


def level_bounds(bundle: GradedHiggsBundle) -> list[LevelBound]:
    return [level_bound(bundle, v) for v in range(bundle.weight // 2 + 1)]


def first_active_level(bundle: GradedHiggsBundle) -> int | None:
    """Smallest ``v`` with a non-zero Higgs field on ``E^{k-v,v}``."""
    k = bundle.weight
    for v in range(k + 1):
        c = bundle.component(k - v)
        if c is not None and c.higgs_rank > 0:
            return v
    return None


def kernel_shape_ok(bundle: GradedHiggsBundle) -> bool:
    """Kernel ranks are those of a strictly maximal bundle.

    Above the middle the Higgs field is injective, at and below the middle it
    maps onto the next piece.
    """
    for c in bundle.components:
        if c.p > c.q:
            if c.kernel_rank != 0:
                return False
        elif c.higgs_rank != bundle.rank(c.p - 1):
            return False
    return True


@dataclass(frozen=True)
class AuditReport:
    weight: int
    log_canonical_degree: int
    levels: tuple[LevelBound, ...]
    dual_levels: tuple[LevelBound, ...]
    total_lhs: Fraction
    total_bound: Fraction
    first_active_level: int | None
    verdict: Verdict
    witness_levels: tuple[int, ...] = ()
    dual_witness_levels: tuple[int, ...] = ()
    per_level_equality: bool = False
    total_equality: bool = False
    kernel_shape: bool = False
    positivity_ok: bool = True
    diagnostics: tuple[str, ...] = field(default=())

    @property
    def total_slack(self) -> Fraction:
        return self.total_bound - self.total_lhs

    @property
    def realizable(self) -> bool:
        """False when the data contradicts the Arakelov inequalities."""
        return not self.diagnostics

    @property
    def is_strictly_maximal(self) -> bool:
        """Strictly maximal in the sense of the definition, including the
        vacuous case of a flat bundle concentrated in the middle bidegree."""
        if self.verdict is Verdict.STRICTLY_MAXIMAL:
            return True
        if self.verdict is Verdict.ZERO_HIGGS:
            k = self.weight
            return k % 2 == 0 and all(lv.equality_bound == 0 and lv.lhs == 0
                                      for lv in self.levels)
        return False


def audit(bundle: GradedHiggsBundle) -> AuditReport:
    """Check every level bound and classify the bundle.

    The three numerical predicates (equality at every level, equality of the
    totals, kernel ranks of strictly maximal shape) are computed separately.
    All three holding gives ``StrictlyMaximal``; tight bounds with a
    contradicting kernel shape give ``NotRealizable``; otherwise the bundle is
    ``NotMaximal`` and the non-tight levels are the witnesses.  Levels are
    also checked on the dual bundle so that one-sided data is fully seen.
    """
    check(bundle)
    k = bundle.weight
    omega = log_canonical_degree(bundle.base)
    zero_higgs = bundle.has_zero_higgs_field
    if not zero_higgs and omega <= 0:
        raise PositivityViolation(
            f"non-zero Higgs field over a base with log-canonical degree {omega}"
        )

    levels = tuple(level_bounds(bundle))
    dual_levels = tuple(level_bounds(dual_bundle(bundle)))
    total_lhs = sum((lv.lhs for lv in levels), Fraction(0))
    total_bound = sum((lv.bound for lv in levels), Fraction(0))
    mu = first_active_level(bundle)

    diagnostics = []
    for side, lvls in (("", levels), ("dual ", dual_levels)):
        for lv in lvls:
            if lv.slack < 0:
                diagnostics.append(
                    f"{side}level {lv.level}: degree {lv.lhs} exceeds bound {lv.bound}"
                )
    if total_lhs < 0:
        diagnostics.append(f"sum of upper degrees {total_lhs} is negative")
    positivity_ok = True
    if mu is not None and mu <= k // 2 and bundle.degree(k - mu) <= 0:
        positivity_ok = False
        diagnostics.append(
            f"first active level {mu}: degree {bundle.degree(k - mu)} is not positive"
        )

    witnesses = tuple(lv.level for lv in levels if not lv.is_tight)
    dual_witnesses = tuple(lv.level for lv in dual_levels if not lv.is_tight)

    if zero_higgs:
        flat = all(c.degree == 0 for c in bundle.components)
        if not flat:
            diagnostics.append("zero Higgs field with a piece of non-zero degree")
        verdict = Verdict.ZERO_HIGGS if flat else Verdict.NOT_MAXIMAL
        witnesses = tuple(lv.level for lv in levels if lv.lhs != 0)
        dual_witnesses = tuple(lv.level for lv in dual_levels if lv.lhs != 0)
        return AuditReport(
            k, omega, levels, dual_levels, total_lhs, total_bound, mu, verdict,
            witnesses, dual_witnesses, False, False, False, positivity_ok,
            tuple(diagnostics),
        )

    per_level = not witnesses and not dual_witnesses
    total_eq = (
        total_lhs == sum((lv.equality_bound for lv in levels), Fraction(0))
        and sum((lv.lhs for lv in dual_levels), Fraction(0))
        == sum((lv.equality_bound for lv in dual_levels), Fraction(0))
    )
    shape = kernel_shape_ok(bundle)
    if total_eq and not per_level:
        diagnostics.append("total bound attained although some level is not tight")

    if per_level and total_eq and shape:
        verdict = Verdict.STRICTLY_MAXIMAL
    elif per_level and total_eq:
        verdict = Verdict.NOT_REALIZABLE
        diagnostics.append("degrees are extremal but kernel ranks are not")
    else:
        verdict = Verdict.NOT_MAXIMAL
    return AuditReport(
        k, omega, levels, dual_levels, total_lhs, total_bound, mu, verdict,
        witnesses, dual_witnesses, per_level, total_eq, shape, positivity_ok,
        tuple(diagnostics),
    )


def render_text(report: AuditReport) -> str:
    lines = [
        f"weight {report.weight}, deg Omega(log S) = {report.log_canonical_degree}",
        f"{'level':>5}  {'deg':>8}  {'bound':>8}  {'slack':>8}  {'tight':>5}",
    ]
    for lv in report.levels:
        lines.append(
            f"{lv.level:>5}  {str(lv.lhs):>8}  {str(lv.bound):>8}  "
            f"{str(lv.slack):>8}  {'yes' if lv.is_tight else 'no':>5}"
        )
    lines.append(f"total  {str(report.total_lhs):>8}  {str(report.total_bound):>8}  "
                 f"{str(report.total_slack):>8}")
    lines.append(f"first active level: {report.first_active_level}")
    verdict = report.verdict.value
    if report.verdict is Verdict.NOT_MAXIMAL:
        verdict += f" (levels {list(report.witness_levels)}"
        if report.dual_witness_levels:
            verdict += f", dual levels {list(report.dual_witness_levels)}"
        verdict += ")"
    lines.append(f"verdict: {verdict}")
    for d in report.diagnostics:
        lines.append(f"note: {d}")
    return "\n".join(lines) + "\n"
