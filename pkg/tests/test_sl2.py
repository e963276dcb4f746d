import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hodgemax.core import RepObject, TwistedRep, WeightMismatch
from hodgemax.sl2 import (
    IntegerMatrix2,
    clebsch_gordan,
    dual,
    hodge_numbers,
    iterated_tensor_power,
    sym_power,
    sym_power_matrix,
    sym_power_trace_oracle,
    tensor,
    tensor_power_decompose,
    trace_polynomial,
)
from hodgemax.core import HodgeError

from oracles import char_product, character, laurent_sym_trace, peel, random_sl2


def widths(x):
    return sorted((t.width for t in x.terms for _ in range(t.multiplicity)), reverse=True)


def as_terms(x):
    return [(t.width, t.twist, t.multiplicity) for t in x.terms]


def test_cg_3_3():
    assert widths(clebsch_gordan(3, 3)) == [6, 4, 2, 0]


@pytest.mark.parametrize("a", range(6))
def test_cg_with_trivial(a):
    assert widths(clebsch_gordan(a, 0)) == [a]
    assert widths(clebsch_gordan(0, a)) == [a]


def test_cg_2_1():
    # (l^2 + 1 + l^-2)(l + l^-1) = (l^3 + l + l^-1 + l^-3) + (l + l^-1)
    assert widths(clebsch_gordan(2, 1)) == [3, 1]


def test_cg_untwisted():
    assert all(t.twist == 0 for t in clebsch_gordan(4, 2).terms)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(8) for b in range(8)])
def test_cg_matches_character_oracle(a, b):
    got = {(t.width, t.twist): t.multiplicity for t in tensor(sym_power(a), sym_power(b)).terms}
    assert got == peel(char_product(character([(a, 0, 1)]), character([(b, 0, 1)])))


def test_smallest_pieri():
    assert as_terms(tensor(sym_power(1), sym_power(1))) == [(2, 0, 1), (0, 1, 1)]


@pytest.mark.parametrize("k,i,j", [(4, 0, 1), (5, 1, 2), (6, 2, 2), (7, 0, 3)])
def test_twisted_pieri(k, i, j):
    x = RepObject.single(k - 2 * i, i)
    y = RepObject.single(k - 2 * j, j)
    expected = RepObject(tuple(TwistedRep(2 * k - 2 * i - 2 * j - 2 * m, i + j + m)
                               for m in range(min(k - 2 * i, k - 2 * j) + 1)))
    assert tensor(x, y) == expected


reps = st.lists(st.builds(TwistedRep, st.integers(0, 5), st.integers(-2, 2),
                          st.integers(1, 3), st.integers(1, 2)),
                min_size=0, max_size=4).map(lambda ts: RepObject(tuple(ts)))


@given(reps, reps)
def test_tensor_dimension_multiplies(x, y):
    assert tensor(x, y).dimension == x.dimension * y.dimension


@given(reps, reps)
def test_tensor_matches_character_product(x, y):
    prod = char_product(character(as_terms(x)), character(as_terms(y)))
    assert tensor(x, y).counts() == peel(prod)


@given(reps, reps, reps)
@settings(max_examples=40)
def test_tensor_associative_and_commutative(x, y, z):
    assert tensor(x, y) == tensor(y, x)
    assert tensor(tensor(x, y), z) == tensor(x, tensor(y, z))


def test_dual_examples():
    assert as_terms(dual(sym_power(1))) == [(1, -1, 1)]
    assert dual(sym_power(0)) == sym_power(0)


@given(reps)
def test_dual_involution(x):
    assert dual(dual(x)) == x


@given(reps)
def test_dual_matches_negated_character(x):
    neg = {(-p, -q): n for (p, q), n in character(as_terms(x)).items()}
    assert dual(x).counts() == peel(neg)


@given(st.integers(0, 6), st.integers(-3, 3), st.integers(1, 3))
def test_hodge_numbers_of_dual_are_reflected(w, t, n):
    x = RepObject.single(w, t, n)
    wt = w + 2 * t
    h = {(p, q): r for p, q, r in hodge_numbers(x, wt)}
    hd = {(p, q): r for p, q, r in hodge_numbers(dual(x), -wt)}
    assert hd == {(-p, -q): r for (p, q), r in h.items()}


def test_tensor_power_three():
    x = tensor_power_decompose(3)
    assert as_terms(x) == [(3, 0, 1), (1, 1, 2)]


def test_tensor_power_four_character():
    c = character([(1, 0, 1)])
    ch = c
    for _ in range(3):
        ch = char_product(ch, c)
    assert peel(ch) == {(4, 0): 1, (2, 1): 3, (0, 2): 2}
    assert tensor_power_decompose(4).counts() == {(4, 0): 1, (2, 1): 3, (0, 2): 2}


def test_tensor_power_zero():
    assert tensor_power_decompose(0) == sym_power(0)


@pytest.mark.parametrize("n", range(0, 11))
def test_tensor_power_equals_iterated_tensor(n):
    assert tensor_power_decompose(n) == iterated_tensor_power(sym_power(1), n)


def test_sym_power():
    assert as_terms(sym_power(1)) == [(1, 0, 1)]
    assert sym_power(5).dimension == 6
    with pytest.raises(HodgeError):
        sym_power(-1)


def test_hodge_numbers_examples():
    assert hodge_numbers(sym_power(3), 3) == [(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1)]
    x = sym_power(3) + 2 * RepObject.single(1, 1)
    h = {(p, q): r for p, q, r in hodge_numbers(x, 3)}
    assert h[3, 0] == 1 and h[2, 1] == 3
    assert hodge_numbers(RepObject.single(0, 1), 2) == [(1, 1, 1)]


def test_hodge_numbers_weight_mismatch():
    with pytest.raises(WeightMismatch):
        hodge_numbers(sym_power(3) + sym_power(1), 3)


# -- trace polynomials --------------------------------------------------------


def test_trace_polynomial_examples():
    assert trace_polynomial(0).coefficients == (1,)
    assert trace_polynomial(1).coefficients == (0, 1)
    assert trace_polynomial(2).coefficients == (-1, 0, 1)
    assert trace_polynomial(3).coefficients == (0, -2, 0, 1)
    assert str(trace_polynomial(3)) == "t^3 - 2t"


@pytest.mark.parametrize("n", range(0, 16))
def test_trace_polynomial_at_laurent_points(n):
    p = trace_polynomial(n)
    assert p.degree == n and p.coefficients[-1] == 1
    for lam in (Fraction(2), Fraction(3), Fraction(-5, 7), Fraction(11, 4)):
        t = lam + 1 / lam
        value = sum((c * t ** e for e, c in enumerate(p.coefficients)), Fraction(0))
        assert value == laurent_sym_trace(lam, n)


@pytest.mark.parametrize("n", range(2, 31))
def test_chebyshev_recurrence(n):
    pn = list(trace_polynomial(n).coefficients)
    p1 = list(trace_polynomial(n - 1).coefficients)
    p2 = list(trace_polynomial(n - 2).coefficients)
    rec = [0] + p1
    for e, c in enumerate(p2):
        rec[e] -= c
    assert pn == rec


def test_oracle_examples():
    ident = IntegerMatrix2(1, 0, 0, 1)
    for n in range(8):
        assert sym_power_trace_oracle(ident, n) == n + 1
    assert sym_power_trace_oracle(IntegerMatrix2(1, 1, 0, 1), 2) == 3
    m = IntegerMatrix2(2, 1, 1, 1)
    assert sym_power_trace_oracle(m, 2) == 8 == trace_polynomial(2)(m.trace)


def test_oracle_matrix_is_a_representation():
    rng = random.Random(7)
    for _ in range(10):
        a = IntegerMatrix2(*random_sl2(rng, 6))
        b = IntegerMatrix2(*random_sl2(rng, 6))
        ab = IntegerMatrix2(a.a * b.a + a.b * b.c, a.a * b.b + a.b * b.d,
                            a.c * b.a + a.d * b.c, a.c * b.b + a.d * b.d)
        for n in (2, 3):
            ma, mb, mab = (sym_power_matrix(x, n) for x in (a, b, ab))
            prod = [[sum(ma[i][k] * mb[k][j] for k in range(n + 1)) for j in range(n + 1)]
                    for i in range(n + 1)]
            # x -> a x + c y is the transpose action, so Sym^n reverses the order
            prod_rev = [[sum(mb[i][k] * ma[k][j] for k in range(n + 1)) for j in range(n + 1)]
                        for i in range(n + 1)]
            assert mab in (prod, prod_rev)


def test_det_must_be_one():
    with pytest.raises(HodgeError):
        IntegerMatrix2(2, 0, 0, 1)


@pytest.mark.parametrize("n", range(0, 12))
def test_oracle_agrees_on_random_matrices(n):
    rng = random.Random(1000 + n)
    p = trace_polynomial(n)
    for _ in range(20):
        m = IntegerMatrix2(*random_sl2(rng))
        assert sym_power_trace_oracle(m, n) == p(m.trace)
