"""Model bundles of pure strictly maximal components and the decomposition rules
that follow from strict maximality."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .core import (
    BaseCurve,
    GradedHiggsBundle,
    HodgeComponent,
    HodgeError,
    NonPositiveBase,
    ParityError,
    RepObject,
    TwistedRep,
    WeightMismatch,
    WidthParityError,
    direct_sum,
    log_canonical_degree,
    theta_characteristic_degree,
)
from .sl2 import dual, hodge_numbers, tensor


class NotMaximalShape(HodgeError):
    """Hodge numbers that no strictly maximal bundle can have."""


class ZeroRank(HodgeError):
    pass


# -- width decompositions ----------------------------------------------------


@dataclass(frozen=True)
class WidthDecomposition:
    """Multiplicity ``m_i`` of each pure width ``i`` in a weight-``k`` bundle."""

    weight: int
    multiplicities: tuple[tuple[int, int], ...]

    def __init__(self, weight: int, multiplicities: Mapping[int, int] | Sequence = ()):
        items = dict(multiplicities)
        for w, m in items.items():
            if w < 0 or w > weight:
                raise WidthParityError(f"width {w} outside 0..{weight}")
            if (weight - w) % 2:
                raise WidthParityError(f"width {w} has the wrong parity for weight {weight}")
            if m < 0:
                raise HodgeError(f"negative multiplicity for width {w}")
        canon = tuple(sorted(((w, m) for w, m in items.items() if m), reverse=True))
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "multiplicities", canon)

    def as_dict(self) -> dict[int, int]:
        return dict(self.multiplicities)

    def __getitem__(self, width: int) -> int:
        return self.as_dict().get(width, 0)

    def to_rep(self) -> RepObject:
        """``sum m_i S^i(-(k-i)/2)``."""
        k = self.weight
        return RepObject(tuple(TwistedRep(w, (k - w) // 2, m)
                               for w, m in self.multiplicities))

    @classmethod
    def from_rep(cls, x: RepObject, weight: int) -> WidthDecomposition:
        mult = {}
        for t in x.terms:
            if t.weight != weight:
                raise WeightMismatch(
                    f"term S^{t.width} with twist {t.twist} is not of weight {weight}"
                )
            mult[t.width] = mult.get(t.width, 0) + t.count
        return cls(weight, mult)


def hodge_vector_top(h: Sequence[int], k: int) -> list[int]:
    """Accept ``[h^{k,0}, ..., h^{k-[k/2],[k/2]}]`` or the full palindromic list."""
    h = list(h)
    half = k // 2 + 1
    if len(h) == k + 1:
        if h != h[::-1]:
            raise NotMaximalShape(f"Hodge numbers {h} are not symmetric")
        return h[:half]
    if len(h) != half:
        raise HodgeError(f"expected {half} or {k + 1} Hodge numbers, got {len(h)}")
    return h


def width_multiplicities_from_hodge_numbers(k: int, h: Sequence[int]) -> WidthDecomposition:
    """``m_{k-2i} = h^{k-i,i} - h^{k-i+1,i-1}`` with ``h^{k+1,-1} = 0``."""
    top = hodge_vector_top(h, k)
    if any(x < 0 for x in top):
        raise HodgeError("Hodge numbers must be non-negative")
    mult = {}
    prev = 0
    for i, hi in enumerate(top):
        if hi < prev:
            raise NotMaximalShape(
                f"h^{{{k - i},{i}}} = {hi} < h^{{{k - i + 1},{i - 1}}} = {prev}"
            )
        mult[k - 2 * i] = hi - prev
        prev = hi
    return WidthDecomposition(k, mult)


# -- model bundles -----------------------------------------------------------


def build_pure_component(i: int, k: int, base: BaseCurve, unitary_rank: int = 1
                         ) -> GradedHiggsBundle:
    """Numerical data of ``S^i(L)(-(k-i)/2) (x) T`` with ``rank T = unitary_rank``.

    The piece at ``p = (k+i-2mu)/2`` has degree ``(i-2mu) * rank * deg L``
    where ``deg L = (2g-2+s)/2``; only the bottom piece lies in the kernel.
    Width 0 needs no theta characteristic and is accepted over any base.
    """
    if i < 0 or i > k:
        raise WidthParityError(f"width {i} outside 0..{k}")
    if (k - i) % 2:
        raise WidthParityError(f"k - i = {k - i} is odd: no pure piece of width {i}")
    if unitary_rank < 1:
        raise HodgeError("unitary_rank must be positive")
    if i == 0:
        deg_l = Fraction(0)
    else:
        if log_canonical_degree(base) <= 0:
            raise NonPositiveBase(f"log-canonical degree of {base} is not positive")
        if base.punctures % 2:
            raise ParityError(f"{base.punctures} punctures: pass to a double cover first")
        deg_l = theta_characteristic_degree(base).degree
    comps = []
    for mu in range(i + 1):
        p = (k + i - 2 * mu) // 2
        kernel = unitary_rank if mu == i else 0
        comps.append(HodgeComponent(p, k - p, unitary_rank,
                                    (i - 2 * mu) * unitary_rank * deg_l, kernel))
    return GradedHiggsBundle(k, base, tuple(comps), self_dual=True)


def pure_components(d: WidthDecomposition, base: BaseCurve,
                    unitary_ranks: Mapping[int, int] | None = None
                    ) -> list[GradedHiggsBundle]:
    unitary_ranks = unitary_ranks or {}
    return [build_pure_component(w, d.weight, base, m * unitary_ranks.get(w, 1))
            for w, m in d.multiplicities]


def assemble(d: WidthDecomposition, base: BaseCurve,
             unitary_ranks: Mapping[int, int] | None = None) -> GradedHiggsBundle:
    """Direct sum of the model bundles of every width in ``d``.

    Width ``i`` contributes ``d[i]`` copies of ``S^i`` tensored with a unitary
    piece of rank ``unitary_ranks.get(i, 1)``.
    """
    return direct_sum(pure_components(d, base, unitary_ranks), weight=d.weight, base=base)


def decompose_bundle(bundle: GradedHiggsBundle) -> WidthDecomposition:
    return width_multiplicities_from_hodge_numbers(
        bundle.weight, bundle.hodge_vector()[: bundle.weight // 2 + 1]
    )


def degree_zero_check(bundle: GradedHiggsBundle) -> bool:
    return bundle.total_degree == 0


@dataclass(frozen=True)
class SlopeComparison:
    sub_slope: Fraction
    ambient_slope: Fraction

    @property
    def holds(self) -> bool:
        return self.sub_slope <= self.ambient_slope

    @property
    def equality(self) -> bool:
        return self.sub_slope == self.ambient_slope

    @property
    def strict(self) -> bool:
        return self.sub_slope < self.ambient_slope


def _slope(pairs) -> Fraction:
    rank = sum(r for r, _ in pairs)
    if rank <= 0:
        raise ZeroRank("slope of a rank-zero sheaf")
    return sum((Fraction(d) for _, d in pairs), Fraction(0)) / rank


def slope_check(ambient: Sequence[tuple[int, Fraction]],
                sub: Sequence[tuple[int, Fraction]]) -> SlopeComparison:
    """Compare ``deg/rank`` of a subsheaf with that of the ambient sheaf.

    Both arguments are lists of ``(rank, degree)`` pairs that get summed.
    """
    if sum(r for r, _ in sub) > sum(r for r, _ in ambient):
        raise HodgeError("subsheaf rank exceeds ambient rank")
    return SlopeComparison(_slope(sub), _slope(ambient))


# -- invariant tensors -------------------------------------------------------


@dataclass(frozen=True)
class BidegreeReport:
    weight: int
    m: int
    m_prime: int
    expected_bidegree: tuple[int, int] | None
    width_zero_terms: tuple[tuple[int, int], ...]  # (twist, multiplicity)
    ok: bool

    @property
    def width_zero_multiplicity(self) -> int:
        return sum(n for _, n in self.width_zero_terms)


def mixed_tensor_power(d: RepObject, m: int, m_prime: int) -> RepObject:
    """``(x)^m d  (x)  (x)^{m'} dual(d)``."""
    out = RepObject.single(0)
    for _ in range(m):
        out = tensor(out, d)
    dd = dual(d)
    for _ in range(m_prime):
        out = tensor(out, dd)
    return out


def invariant_bidegree_check(d: RepObject, m: int, m_prime: int, weight: int
                             ) -> BidegreeReport:
    """Every width-0 summand of the mixed tensor power must sit at
    ``(k(m-m')/2, k(m-m')/2)``; flat global tensors live only there."""
    if m < 0 or m_prime < 0:
        raise HodgeError("tensor exponents must be non-negative")
    for t in d.terms:
        if t.weight != weight:
            raise WeightMismatch(f"term S^{t.width} twist {t.twist} not of weight {weight}")
        if t.width == 0 and weight % 2:
            raise WeightMismatch("a width-0 piece cannot occur in odd weight")
    v = mixed_tensor_power(d, m, m_prime)
    total = weight * (m - m_prime)
    hodge_numbers(v, total)  # weight consistency of the product
    expected = (total // 2, total // 2) if total % 2 == 0 else None
    zero = tuple((t.twist, t.multiplicity) for t in v.terms if t.width == 0)
    ok = all(expected == (tw, tw) for tw, _ in zero)
    return BidegreeReport(weight, m, m_prime, expected, zero, ok)


# -- existence rules ---------------------------------------------------------


class Status(str, enum.Enum):
    FEASIBLE = "Feasible"
    INFEASIBLE = "Infeasible"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class FeasibilityVerdict:
    status: Status
    rule: str
    detail: str


RULE_ODD_WEIGHT_COMPACT = "no-odd-weight-over-projective-curve"
RULE_P1_PARITY = "odd-weight-on-P1-needs-even-punctures"
RULE_POSITIVITY = "nonzero-higgs-needs-positive-log-canonical"
RULE_MODULAR = "modular-elliptic-family"
RULE_BORCEA = "borcea-calabi-yau-family"
RULE_KUMMER = "even-weight-involution-quotient"
RULE_OPEN_CY = "open-calabi-yau-over-projective-curve"
RULE_NONE = "no-applicable-rule"


def _copies(n):
    return "one copy of" if n == 1 else f"{n} copies of"


def feasibility(k: int, base: BaseCurve, h_top: int = 1,
                wants_strictly_maximal: bool = True, *, calabi_yau: bool = False
                ) -> FeasibilityVerdict:
    """Decide existence of a non-constant strictly maximal variation from
    known theorems only.

    ``Infeasible`` is returned only when a non-existence theorem applies and
    ``Feasible`` only when an explicit construction exists (possibly after an
    etale or double cover of a suitable base); everything else is ``Unknown``.
    """
    s, g = base.punctures, base.genus
    omega = log_canonical_degree(base)
    if not wants_strictly_maximal:
        return FeasibilityVerdict(Status.UNKNOWN, RULE_NONE,
                                  "no rule is stated without strict maximality")
    if k < 1 or h_top < 1:
        return FeasibilityVerdict(Status.UNKNOWN, RULE_NONE,
                                  "needs weight >= 1 and h^{k,0} >= 1")
    if s == 0 and k % 2 and h_top == 1:
        return FeasibilityVerdict(
            Status.INFEASIBLE, RULE_ODD_WEIGHT_COMPACT,
            f"weight {k} is odd, h^{{k,0}} = 1 and the base has no punctures",
        )
    if g == 0 and k % 2 and s % 2:
        return FeasibilityVerdict(
            Status.INFEASIBLE, RULE_P1_PARITY,
            f"over P^1 an odd-weight strictly maximal variation needs an even number "
            f"of punctures, got {s}",
        )
    if omega <= 0:
        return FeasibilityVerdict(
            Status.INFEASIBLE, RULE_POSITIVITY,
            f"h^{{k,0}} > 0 forces a non-zero Higgs field, impossible with "
            f"2g-2+s = {omega}",
        )
    if s > 0 and s % 2 == 0:
        if k == 1:
            return FeasibilityVerdict(
                Status.FEASIBLE, RULE_MODULAR,
                f"{_copies(h_top)} the weight-1 variation of a modular family "
                "of elliptic curves",
            )
        return FeasibilityVerdict(
            Status.FEASIBLE, RULE_BORCEA,
            f"{_copies(h_top)} the weight-{k} variation of the Borcea-type "
            f"Calabi-Yau {k}-folds built from a modular elliptic family",
        )
    if s == 0 and k % 2 == 0:
        if calabi_yau and k > 2:
            return FeasibilityVerdict(
                Status.UNKNOWN, RULE_OPEN_CY,
                f"no construction or obstruction known for Calabi-Yau {k}-folds "
                "over an unpunctured base",
            )
        return FeasibilityVerdict(
            Status.FEASIBLE, RULE_KUMMER,
            f"{_copies(h_top)} the variation of the involution quotient of a "
            "product of Shimura-curve abelian families",
        )
    return FeasibilityVerdict(Status.UNKNOWN, RULE_NONE,
                              "outside the hypotheses of every known rule")
