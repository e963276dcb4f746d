"""Variation-level data of explicit strictly maximal families: Borcea-type
Calabi-Yau families, involution quotients of abelian families, and the
Shimura-curve abelian families they start from."""

from __future__ import annotations

from dataclasses import dataclass

from .core import HodgeError, RepObject, TwistedRep, WeightMismatch
from .sl2 import tensor_power_decompose


class CaseParityError(HodgeError):
    pass


KUMMER_CASES = ("i", "ii.a", "ii.b")


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: str  # "Borcea", "InvolutionQuotient" or "KummerShimura"
    n: int | None = None
    d: int | None = None
    case: str | None = None

    def __post_init__(self):
        if self.kind in ("Borcea", "InvolutionQuotient"):
            if self.n is None or self.n < 1:
                raise HodgeError(f"{self.kind} needs n >= 1")
        elif self.kind == "KummerShimura":
            _check_kummer_case(self.d, self.case)
        else:
            raise HodgeError(f"unknown family kind {self.kind!r}")


def normalize_weight(x: RepObject, weight: int) -> RepObject:
    """Re-twist every term so that it has the given weight."""
    terms = []
    for t in x.terms:
        if (weight - t.width) % 2:
            raise WeightMismatch(f"width {t.width} cannot have weight {weight}")
        terms.append(TwistedRep(t.width, (weight - t.width) // 2, t.multiplicity))
    return RepObject(tuple(terms))


@dataclass(frozen=True)
class BorceaVHS:
    n: int
    anti_invariant: RepObject
    invariant_note: str

    @property
    def descriptor(self) -> FamilyDescriptor:
        return FamilyDescriptor("Borcea", n=self.n)


def borcea_vhs(n: int) -> BorceaVHS:
    """Weight-``n`` variation of the Borcea-type family of Calabi-Yau ``n``-folds.

    The anti-invariant part is the ``n``-th tensor power of the weight-1
    variation of the modular elliptic family. The invariant part vanishes for
    odd ``n`` and is flat in the middle bidegree for even ``n``; its rank
    depends on the resolution and is not computed.
    """
    if n < 1:
        raise HodgeError("n must be at least 1")
    anti = normalize_weight(tensor_power_decompose(n), n)
    if n % 2:
        note = "zero"
    else:
        note = f"unitary at ({n // 2}, {n // 2})"
    return BorceaVHS(n, anti, note)


def involution_quotient_vhs(weight_k: int, source: RepObject,
                            exceptional_rank: int = 1) -> RepObject:
    """Weight-``k`` variation of the quotient by the involution.

    Odd weights vanish. For even ``k >= 2`` the source variation survives and
    the blown-up fixed locus adds a flat piece of rank ``exceptional_rank`` in
    bidegree ``(k/2, k/2)``; in weight 0 the source is returned as is.
    """
    for t in source.terms:
        if t.weight != weight_k:
            raise WeightMismatch(f"source term S^{t.width} not of weight {weight_k}")
    if weight_k % 2:
        return RepObject()
    if weight_k == 0:
        return source
    if exceptional_rank < 0:
        raise HodgeError("exceptional_rank must be non-negative")
    return source + RepObject.single(0, weight_k // 2, exceptional_rank)


def _check_kummer_case(d, case):
    if case not in KUMMER_CASES:
        raise CaseParityError(f"unknown case {case!r}; expected one of {KUMMER_CASES}")
    if d is None or d < 1:
        raise CaseParityError("d must be a positive integer")
    if case == "i" and not (d % 2 == 1 and d > 1):
        raise CaseParityError(f"case i needs d odd and > 1, got d = {d}")
    if case == "ii.a" and d % 2 == 0:
        raise CaseParityError(f"case ii.a needs d odd, got d = {d}")
    if case == "ii.b" and d % 2 == 1:
        raise CaseParityError(f"case ii.b needs d even, got d = {d}")


@dataclass(frozen=True)
class KummerEntry:
    d: int
    case: str
    embedding_exponent: int  # m with D inside M(2^m, Q)
    fiber_dimension: int
    endomorphism_algebra: str

    @property
    def descriptor(self) -> FamilyDescriptor:
        return FamilyDescriptor("KummerShimura", d=self.d, case=self.case)


def kummer_table(d: int, case: str) -> KummerEntry:
    """Fiber type of the universal abelian family over the Shimura curve of a
    quaternion algebra over a totally real field of degree ``d``."""
    _check_kummer_case(d, case)
    if case == "i":
        return KummerEntry(d, case, d, 2 ** (d - 1), "Q")
    label = ("totally indefinite quaternion algebra over Q" if case == "ii.a"
             else "totally definite quaternion algebra over Q")
    return KummerEntry(d, case, d + 1, 2 ** d, label)
