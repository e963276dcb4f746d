"""Exact numerical data of graded Higgs bundles over punctured curves.

A graded Higgs bundle of weight ``k`` is recorded only through its numerical
shadow: for every bidegree ``(p, q)`` with ``p + q = k`` the rank, the degree
and the rank of the kernel of the Higgs field leaving that piece.  Degrees are
exact rationals with denominator 1 or 2 (``fractions.Fraction``).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

Rational = Fraction


class HodgeError(ValueError):
    """Base class for errors raised on mathematically invalid input."""


class NonPositiveBase(HodgeError):
    """The log-canonical degree of the base is not positive."""


class ParityError(HodgeError):
    """Odd number of punctures where an even number is required."""


class WidthParityError(HodgeError):
    """Width and weight of a pure component differ by an odd number."""


class WeightMismatch(HodgeError):
    """A representation term does not have the declared weight."""


class InvalidBundle(HodgeError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to an exact Fraction.

    Floats are refused: nothing in this package is allowed to round.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not degrees")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


@dataclass(frozen=True)
class BaseCurve:
    """A smooth projective curve of some genus with ``punctures`` marked points."""

    genus: int
    punctures: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise HodgeError("genus and puncture count must be non-negative")

    @property
    def log_canonical_degree(self) -> int:
        return log_canonical_degree(self)


def log_canonical_degree(base: BaseCurve) -> int:
    """Degree of the sheaf of log one-forms, ``2g - 2 + s``."""
    return 2 * base.genus - 2 + base.punctures


class ThetaCharacteristic(NamedTuple):
    degree: Fraction
    parity_ok: bool


def theta_characteristic_degree(base: BaseCurve) -> ThetaCharacteristic:
    """Degree of a logarithmic theta characteristic, i.e. half of ``2g - 2 + s``.

    ``parity_ok`` is False for an odd number of punctures; then the degree is
    a proper half-integer and no line bundle squares to the log-canonical
    sheaf without first passing to a double cover.
    """
    d = log_canonical_degree(base)
    if d <= 0:
        raise NonPositiveBase(
            f"log-canonical degree {d} <= 0: a non-zero Higgs field is impossible"
        )
    return ThetaCharacteristic(Fraction(d, 2), base.punctures % 2 == 0)


@dataclass(frozen=True)
class HodgeComponent:
    p: int
    q: int
    rank: int
    degree: Fraction
    kernel_rank: int

    def __post_init__(self):
        object.__setattr__(self, "degree", as_rational(self.degree))

    @property
    def higgs_rank(self) -> int:
        """Rank of the Higgs field leaving this piece."""
        return self.rank - self.kernel_rank

    @property
    def slope(self) -> Fraction:
        if self.rank == 0:
            raise ZeroDivisionError("slope of a rank-zero piece")
        return self.degree / self.rank


@dataclass(frozen=True)
class GradedHiggsBundle:
    """Numerical data ``(weight, base, components)`` of a graded Higgs bundle.

    Components are kept sorted by decreasing ``p``.  ``self_dual`` declares
    that the data comes from a polarized variation, which makes
    :func:`validate` additionally check Hodge symmetry.
    """

    weight: int
    base: BaseCurve
    components: tuple[HodgeComponent, ...] = ()
    self_dual: bool = True

    def __post_init__(self):
        comps = tuple(sorted(self.components, key=lambda c: -c.p))
        object.__setattr__(self, "components", comps)

    def component(self, p: int) -> HodgeComponent | None:
        for c in self.components:
            if c.p == p:
                return c
        return None

    def rank(self, p: int) -> int:
        c = self.component(p)
        return 0 if c is None else c.rank

    def degree(self, p: int) -> Fraction:
        c = self.component(p)
        return Fraction(0) if c is None else c.degree

    def kernel_rank(self, p: int) -> int:
        c = self.component(p)
        return 0 if c is None else c.kernel_rank

    @property
    def total_rank(self) -> int:
        return sum(c.rank for c in self.components)

    @property
    def total_degree(self) -> Fraction:
        return sum((c.degree for c in self.components), Fraction(0))

    @property
    def has_zero_higgs_field(self) -> bool:
        return all(c.kernel_rank == c.rank for c in self.components)

    def hodge_numbers(self) -> dict[tuple[int, int], int]:
        return {(c.p, c.q): c.rank for c in self.components if c.rank}

    def hodge_vector(self) -> list[int]:
        """``[h^{k,0}, h^{k-1,1}, ..., h^{0,k}]``."""
        k = self.weight
        return [self.rank(k - i) for i in range(k + 1)]

    def with_degree(self, p: int, degree, *, self_dual: bool | None = None):
        """Copy with one degree replaced (used to build perturbations)."""
        degree = as_rational(degree)
        comps = []
        for c in self.components:
            if c.p == p:
                c = HodgeComponent(c.p, c.q, c.rank, degree, c.kernel_rank)
            comps.append(c)
        return GradedHiggsBundle(
            self.weight, self.base, tuple(comps),
            self.self_dual if self_dual is None else self_dual,
        )

    def __add__(self, other: GradedHiggsBundle) -> GradedHiggsBundle:
        return direct_sum([self, other], weight=self.weight, base=self.base)


def direct_sum(bundles: Iterable[GradedHiggsBundle], *, weight: int,
               base: BaseCurve) -> GradedHiggsBundle:
    """Component-wise sum of ranks, degrees and kernel ranks."""
    ranks: dict[int, int] = defaultdict(int)
    degrees: dict[int, Fraction] = defaultdict(Fraction)
    kernels: dict[int, int] = defaultdict(int)
    self_dual = True
    for b in bundles:
        if b.weight != weight or b.base != base:
            raise HodgeError("direct sum needs equal weight and base")
        self_dual = self_dual and b.self_dual
        for c in b.components:
            ranks[c.p] += c.rank
            degrees[c.p] += c.degree
            kernels[c.p] += c.kernel_rank
    comps = tuple(
        HodgeComponent(p, weight - p, ranks[p], degrees[p], kernels[p])
        for p in sorted(ranks, reverse=True)
        if ranks[p]
    )
    return GradedHiggsBundle(weight, base, comps, self_dual)


def validate(bundle: GradedHiggsBundle) -> list[str]:
    """Return every violated well-formedness condition; empty means valid."""
    problems = []
    k = bundle.weight
    if k < 0:
        problems.append(f"negative weight {k}")
    seen = set()
    for c in bundle.components:
        tag = f"({c.p},{c.q})"
        if c.p < 0 or c.q < 0:
            problems.append(f"{tag}: negative bidegree")
        if c.p + c.q != k:
            problems.append(f"{tag}: graded piece off the anti-diagonal p+q={k}")
        if c.p in seen:
            problems.append(f"{tag}: duplicate p={c.p}")
        seen.add(c.p)
        if c.rank < 0:
            problems.append(f"{tag}: negative rank {c.rank}")
        if c.kernel_rank < 0:
            problems.append(f"{tag}: negative kernel rank {c.kernel_rank}")
        if c.kernel_rank > c.rank:
            problems.append(f"{tag}: kernel rank {c.kernel_rank} exceeds rank {c.rank}")
        if c.degree.denominator not in (1, 2):
            problems.append(f"{tag}: degree {c.degree} is not in (1/2)Z")
        if c.rank == 0 and c.degree != 0:
            problems.append(f"{tag}: rank-zero piece with non-zero degree")
        target = bundle.rank(c.p - 1)
        if c is not bundle.components[-1] and c.higgs_rank > target:
            problems.append(
                f"{tag}: Higgs image of rank {c.higgs_rank} exceeds target rank {target}"
            )
    if bundle.components:
        low = bundle.components[-1]
        if low.kernel_rank != low.rank:
            problems.append(
                f"({low.p},{low.q}): minimal-p piece must lie in the Higgs kernel"
            )
    if bundle.self_dual:
        for c in bundle.components:
            partner = bundle.component(c.q)
            r = 0 if partner is None else partner.rank
            d = Fraction(0) if partner is None else partner.degree
            if c.p < c.q:
                if partner is None and c.rank:
                    problems.append(f"({c.p},{c.q}): no dual piece ({c.q},{c.p})")
                continue
            if r != c.rank:
                problems.append(f"({c.p},{c.q}): h^{{p,q}}={c.rank} but h^{{q,p}}={r}")
            if d != -c.degree:
                problems.append(
                    f"({c.p},{c.q}): degree {c.degree} is not minus the dual degree {d}"
                )
    return problems


def check(bundle: GradedHiggsBundle) -> GradedHiggsBundle:
    problems = validate(bundle)
    if problems:
        raise InvalidBundle(problems)
    return bundle


@dataclass(frozen=True, order=True)
class TwistedRep:
    """``multiplicity`` copies of ``S^width(L)(-twist)`` tensored with a unitary
    piece of rank ``unitary_rank``.

    The twist shifts bidegrees by ``(twist, twist)``; the occupied bidegrees
    are ``(mu + twist, width - mu + twist)`` for ``mu = 0..width``.
    """

    width: int
    twist: int = 0
    multiplicity: int = 1
    unitary_rank: int = 1

    def __post_init__(self):
        if self.width < 0:
            raise HodgeError("width must be non-negative")
        if self.multiplicity < 0 or self.unitary_rank < 1:
            raise HodgeError("multiplicity >= 0 and unitary_rank >= 1 required")

    @property
    def weight(self) -> int:
        return self.width + 2 * self.twist

    @property
    def count(self) -> int:
        return self.multiplicity * self.unitary_rank

    def bidegrees(self) -> list[tuple[int, int]]:
        return [(mu + self.twist, self.width - mu + self.twist)
                for mu in range(self.width, -1, -1)]


def canonical_terms(terms: Iterable[TwistedRep]) -> tuple[TwistedRep, ...]:
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for t in terms:
        counts[t.width, t.twist] += t.count
    return tuple(
        TwistedRep(w, tw, n, 1)
        for (w, tw), n in sorted(counts.items(), key=lambda kv: (-kv[0][0], kv[0][1]))
        if n
    )


@dataclass(frozen=True)
class RepObject:
    """Element of the twisted representation ring of the rank-2 object ``L``.

    Stored in canonical form: one term per ``(width, twist)`` with
    ``unitary_rank`` 1, zero terms dropped, sorted by decreasing width.
    """

    terms: tuple[TwistedRep, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "terms", canonical_terms(self.terms))

    @classmethod
    def single(cls, width: int, twist: int = 0, multiplicity: int = 1) -> RepObject:
        return cls((TwistedRep(width, twist, multiplicity),))

    @classmethod
    def from_counts(cls, counts) -> RepObject:
        """Build from a mapping ``(width, twist) -> multiplicity``."""
        return cls(tuple(TwistedRep(w, t, n) for (w, t), n in counts.items() if n))

    def counts(self) -> dict[tuple[int, int], int]:
        return {(t.width, t.twist): t.multiplicity for t in self.terms}

    def multiplicity(self, width: int, twist: int) -> int:
        return self.counts().get((width, twist), 0)

    @property
    def dimension(self) -> int:
        return sum((t.width + 1) * t.count for t in self.terms)

    @property
    def weights(self) -> set[int]:
        return {t.weight for t in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def twisted(self, shift: int) -> RepObject:
        """Tate twist by ``(-shift)``: every bidegree moves by ``(shift, shift)``."""
        return RepObject(tuple(TwistedRep(t.width, t.twist + shift, t.multiplicity)
                               for t in self.terms))

    def __add__(self, other: RepObject) -> RepObject:
        return RepObject(self.terms + other.terms)

    def __rmul__(self, n: int) -> RepObject:
        return RepObject(tuple(TwistedRep(t.width, t.twist, t.multiplicity * n)
                               for t in self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for t in self.terms:
            s = f"S^{t.width}"
            if t.twist:
                s += f"(-{t.twist})" if t.twist > 0 else f"(+{-t.twist})"
            if t.multiplicity != 1:
                s = f"{t.multiplicity}*{s}"
            parts.append(s)
        return " + ".join(parts)


def dual_bundle(bundle: GradedHiggsBundle) -> GradedHiggsBundle:
    """The dual Higgs bundle, Tate-twisted back to weight ``k``.

    The piece at ``(p, q)`` is the dual of ``E^{q,p}``; its Higgs field is the
    transpose of the one arriving at ``E^{q,p}``, so its kernel has corank
    ``rank(theta^{q+1,p-1})``.  A polarized bundle is isomorphic to its dual.
    """
    comps = []
    for c in bundle.components:
        source = bundle.component(c.p + 1)
        incoming = 0 if source is None else source.higgs_rank
        comps.append(HodgeComponent(c.q, c.p, c.rank, -c.degree, c.rank - incoming))
    return GradedHiggsBundle(bundle.weight, bundle.base, tuple(comps), bundle.self_dual)
