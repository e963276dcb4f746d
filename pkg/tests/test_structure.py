from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hodgemax.arakelov import Verdict, audit
from hodgemax.core import (
    BaseCurve,
    NonPositiveBase,
    ParityError,
    RepObject,
    WeightMismatch,
    WidthParityError,
)
from hodgemax.sl2 import hodge_numbers, sym_power
from hodgemax.structure import (
    NotMaximalShape,
    Status,
    WidthDecomposition,
    ZeroRank,
    assemble,
    build_pure_component,
    decompose_bundle,
    degree_zero_check,
    feasibility,
    invariant_bidegree_check,
    pure_components,
    slope_check,
    width_multiplicities_from_hodge_numbers,
)


def degrees(b):
    return [c.degree for c in b.components]


def test_weight_one_model():
    b = build_pure_component(1, 1, BaseCurve(0, 4))
    assert [(c.p, c.q, c.degree) for c in b.components] == [(1, 0, 1), (0, 1, -1)]
    # the Higgs field is an isomorphism twisted by the log-canonical sheaf
    assert b.degree(1) - b.degree(0) == BaseCurve(0, 4).log_canonical_degree


def test_unitary_middle_model():
    b = build_pure_component(0, 2, BaseCurve(0, 4), 5)
    assert [(c.p, c.q, c.rank, c.degree, c.kernel_rank) for c in b.components] == [
        (1, 1, 5, 0, 5)]


def test_s3_model_degrees():
    b = build_pure_component(3, 3, BaseCurve(2, 0))
    assert degrees(b) == [3, 1, -1, -3]
    assert degree_zero_check(b)


def test_build_errors():
    with pytest.raises(ParityError):
        build_pure_component(1, 1, BaseCurve(1, 1))
    with pytest.raises(WidthParityError):
        build_pure_component(2, 3, BaseCurve(0, 4))
    with pytest.raises(NonPositiveBase):
        build_pure_component(1, 1, BaseCurve(1, 0))


def test_assemble_borcea_shape():
    b = assemble(WidthDecomposition(3, {3: 1, 1: 2}), BaseCurve(0, 4))
    assert b.rank(3) == 1 and b.rank(2) == 3
    assert b.total_degree == 0


def test_assemble_empty():
    b = assemble(WidthDecomposition(3, {}), BaseCurve(0, 4))
    assert b.components == ()


def test_assemble_unitary():
    b = assemble(WidthDecomposition(2, {0: 4}), BaseCurve(0, 4))
    assert audit(b).verdict is Verdict.ZERO_HIGGS


def test_assemble_with_unitary_ranks():
    b = assemble(WidthDecomposition(3, {3: 1, 1: 1}), BaseCurve(0, 4), {3: 2, 1: 3})
    assert b.hodge_vector() == [2, 5, 5, 2]
    assert audit(b).verdict is Verdict.STRICTLY_MAXIMAL


def test_width_parity_rejected():
    with pytest.raises(WidthParityError):
        WidthDecomposition(3, {0: 1})


@pytest.mark.parametrize("k,h,expected", [
    (3, [1, 3], {3: 1, 1: 2}),
    (1, [4], {1: 4}),
    (2, [1, 2], {2: 1, 0: 1}),
    (2, [1, 2, 1], {2: 1, 0: 1}),
    (4, [1, 1, 3], {4: 1, 0: 2}),
])
def test_width_multiplicities(k, h, expected):
    assert width_multiplicities_from_hodge_numbers(k, h).as_dict() == expected


def test_k2_cross_check_via_hodge_numbers():
    d = width_multiplicities_from_hodge_numbers(2, [1, 2])
    h = {(p, q): r for p, q, r in hodge_numbers(d.to_rep(), 2)}
    assert h == {(2, 0): 1, (1, 1): 2, (0, 2): 1}


def test_not_maximal_shape():
    with pytest.raises(NotMaximalShape):
        width_multiplicities_from_hodge_numbers(3, [2, 1])
    with pytest.raises(NotMaximalShape):
        width_multiplicities_from_hodge_numbers(2, [1, 2, 3])


@st.composite
def decompositions(draw):
    k = draw(st.integers(0, 8))
    mult = {w: draw(st.integers(0, 5)) for w in range(k % 2, k + 1, 2)}
    return WidthDecomposition(k, mult)


bases = st.builds(BaseCurve, st.integers(0, 3), st.sampled_from([0, 2, 4, 6])).filter(
    lambda b: b.log_canonical_degree > 0)


@given(decompositions(), bases)
def test_round_trip(d, base):
    b = assemble(d, base)
    assert decompose_bundle(b) == d
    assert WidthDecomposition.from_rep(d.to_rep(), d.weight) == d
    present = {p: r for p, _, r in hodge_numbers(d.to_rep(), d.weight)}
    h = [present.get(d.weight - i, 0) for i in range(d.weight + 1)]
    assert width_multiplicities_from_hodge_numbers(d.weight, h) == d


@given(decompositions(), bases)
def test_every_pure_component_has_degree_zero(d, base):
    assert all(degree_zero_check(c) for c in pure_components(d, base))


def test_degree_zero_check_on_ladder():
    # S^k ladder: top degree k/2 * deg Omega, each step down subtracts deg Omega
    k, om = 4, 6
    base = BaseCurve(2, 4)
    assert base.log_canonical_degree == om
    b = build_pure_component(k, k, base)
    assert degrees(b) == [Fraction(k * om, 2) - j * om for j in range(k + 1)]
    assert degree_zero_check(b)
    assert not degree_zero_check(b.with_degree(4, b.degree(4) + 1, self_dual=False))


def test_slope_check():
    amb = [(2, Fraction(6))]
    eq = slope_check(amb, amb)
    assert eq.equality and eq.holds
    lower = slope_check(amb, [(1, Fraction(1))])
    assert lower.strict and not lower.equality
    assert not slope_check(amb, [(1, Fraction(4))]).holds


def test_slope_of_top_piece():
    base = BaseCurve(0, 6)
    b = build_pure_component(3, 5, base, 2)
    top = b.components[0]
    r = slope_check([(top.rank, top.degree)], [(top.rank, top.degree)])
    assert r.ambient_slope == 3 * Fraction(base.log_canonical_degree, 2)


def test_slope_zero_rank():
    with pytest.raises(ZeroRank):
        slope_check([(0, Fraction(0))], [(0, Fraction(0))])


def test_bidegree_s1_dual():
    r = invariant_bidegree_check(sym_power(1), 1, 1, 1)
    assert r.ok and r.width_zero_terms == ((0, 1),) and r.expected_bidegree == (0, 0)


@pytest.mark.parametrize("k", range(1, 6))
def test_bidegree_sk_squared(k):
    r = invariant_bidegree_check(sym_power(k), 2, 0, k)
    assert r.ok and r.width_zero_terms == ((k, 1),)


def test_bidegree_unitary_only():
    d = RepObject.single(0, 1, 3)
    for m, mp in [(0, 0), (1, 0), (2, 1), (0, 3)]:
        r = invariant_bidegree_check(d, m, mp, 2)
        assert r.ok and r.width_zero_multiplicity == 3 ** (m + mp)


def test_bidegree_weight_mismatch():
    with pytest.raises(WeightMismatch):
        invariant_bidegree_check(sym_power(3) + sym_power(1), 1, 0, 3)


def test_feasibility_examples():
    v = feasibility(3, BaseCurve(2, 0), 1, True)
    assert v.status is Status.INFEASIBLE
    v = feasibility(1, BaseCurve(0, 4), 1, True)
    assert v.status is Status.FEASIBLE and "modular" in v.rule
    v = feasibility(4, BaseCurve(2, 0), 1, True)
    assert v.status is Status.FEASIBLE and "involution" in v.rule


def test_feasibility_other_rules():
    assert feasibility(3, BaseCurve(0, 5)).status is Status.INFEASIBLE
    assert feasibility(2, BaseCurve(1, 0)).status is Status.INFEASIBLE
    assert feasibility(3, BaseCurve(2, 0), h_top=2).status is Status.UNKNOWN
    assert feasibility(4, BaseCurve(2, 0), calabi_yau=True).status is Status.UNKNOWN
    assert feasibility(2, BaseCurve(2, 0), calabi_yau=True).status is Status.FEASIBLE
    assert feasibility(3, BaseCurve(1, 3)).status is Status.UNKNOWN
    assert feasibility(3, BaseCurve(0, 4), wants_strictly_maximal=False).status \
        is Status.UNKNOWN
    assert feasibility(5, BaseCurve(0, 6)).status is Status.FEASIBLE
