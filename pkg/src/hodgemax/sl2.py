"""Representation-ring calculus for symmetric powers of a rank-2 weight-1 object.

Widths follow the Clebsch-Gordan rule, and twists are tracked so that every
product keeps its Hodge weight: the summand ``S^{a+b-2m}`` of
``S^a(-s) (x) S^b(-t)`` carries twist ``s + t + m`` (the determinant of the
rank-2 object is a Tate twist of weight 2).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .core import HodgeError, RepObject, TwistedRep, WeightMismatch


def clebsch_gordan(a: int, b: int) -> RepObject:
    """Widths ``a+b, a+b-2, ..., |a-b|`` of ``S^a (x) S^b``, each once, untwisted."""
    if a < 0 or b < 0:
        raise HodgeError("widths must be non-negative")
    return RepObject(tuple(TwistedRep(w) for w in range(a + b, abs(a - b) - 1, -2)))


def tensor(x: RepObject, y: RepObject) -> RepObject:
    out: dict[tuple[int, int], int] = defaultdict(int)
    for s in x.terms:
        for t in y.terms:
            n = s.count * t.count
            for m in range(min(s.width, t.width) + 1):
                out[s.width + t.width - 2 * m, s.twist + t.twist + m] += n
    return RepObject.from_counts(out)


def dual(x: RepObject) -> RepObject:
    """Contragredient: bidegrees ``(p, q)`` become ``(-p, -q)``."""
    return RepObject(tuple(TwistedRep(t.width, -t.twist - t.width, t.multiplicity)
                           for t in x.terms))


def sym_power(n: int) -> RepObject:
    if n < 0:
        raise HodgeError("n must be non-negative")
    return RepObject.single(n)


def ballot_number(n: int, j: int) -> int:
    """Multiplicity of ``S^{n-2j}`` in the ``n``-th tensor power of ``S^1``."""
    return comb(n, j) - (comb(n, j - 1) if j > 0 else 0)


def tensor_power_decompose(n: int) -> RepObject:
    """``n``-th tensor power of ``S^1`` as a weight-``n`` object.

    ``S^{n-2j}`` appears ``C(n,j) - C(n,j-1)`` times with twist ``j``.
    """
    if n < 0:
        raise HodgeError("n must be non-negative")
    return RepObject(tuple(TwistedRep(n - 2 * j, j, ballot_number(n, j))
                           for j in range(n // 2 + 1)))


def iterated_tensor_power(x: RepObject, n: int) -> RepObject:
    out = RepObject.single(0)
    for _ in range(n):
        out = tensor(out, x)
    return out


def hodge_numbers(x: RepObject, declared_weight: int) -> list[tuple[int, int, int]]:
    """Hodge numbers ``(p, q, h^{p,q})`` of ``x``, sorted by decreasing ``p``."""
    h: dict[tuple[int, int], int] = defaultdict(int)
    for t in x.terms:
        if t.weight != declared_weight:
            raise WeightMismatch(
                f"term S^{t.width} with twist {t.twist} has weight {t.weight}, "
                f"expected {declared_weight}"
            )
        for pq in t.bidegrees():
            h[pq] += t.count
    return [(p, q, h[p, q]) for p, q in sorted(h, reverse=True) if h[p, q]]


def hodge_dict(x: RepObject, declared_weight: int) -> dict[tuple[int, int], int]:
    return {(p, q): r for p, q, r in hodge_numbers(x, declared_weight)}


# -- trace polynomials -------------------------------------------------------


@dataclass(frozen=True)
class TracePolynomial:
    """Monic integer polynomial with ``tr Sym^n(M) = p_n(tr M)`` on SL_2.

    ``coefficients`` are listed lowest degree first.
    """

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def to_json(self) -> list[int]:
        return list(self.coefficients)

    def __str__(self):
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.coefficients[e]
            if c == 0:
                continue
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def _laurent_power(n: int) -> dict[int, int]:
    # (lambda + 1/lambda)^n as exponent -> coefficient
    return {n - 2 * m: comb(n, m) for m in range(n + 1)}


def _sym_character(j: int) -> dict[int, int]:
    return {j - 2 * m: 1 for m in range(j + 1)}


@lru_cache(maxsize=None)
def _trace_poly_coeffs(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    # Write chi_n = (l + 1/l)^n + sum_{j<n} a_j chi_j by peeling off the
    # highest remaining exponent of chi_n - (l + 1/l)^n.
    residual = defaultdict(int)
    for e, c in _sym_character(n).items():
        residual[e] += c
    for e, c in _laurent_power(n).items():
        residual[e] -= c
    a = {}
    for j in range(n - 1, -1, -1):
        c = residual.get(j, 0)
        if c:
            a[j] = c
            for e in _sym_character(j):
                residual[e] -= c
    if any(residual.values()):
        raise ArithmeticError("residual is not a combination of characters")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for j, c in a.items():
        for e, pc in enumerate(_trace_poly_coeffs(j)):
            coeffs[e] += c * pc
    return tuple(coeffs)


def trace_polynomial(n: int) -> TracePolynomial:
    if n < 0:
        raise HodgeError("n must be non-negative")
    return TracePolynomial(_trace_poly_coeffs(n))


@dataclass(frozen=True)
class IntegerMatrix2:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det != 1:
            raise HodgeError(f"determinant {self.det} != 1")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d


def _linear_power(u: int, v: int, n: int) -> list[int]:
    # coefficients of (u x + v y)^n indexed by the power of y
    return [comb(n, r) * u ** (n - r) * v ** r for r in range(n + 1)]


def sym_power_matrix(m: IntegerMatrix2, n: int) -> list[list[int]]:
    """Matrix of ``Sym^n(m)`` on the basis ``x^n, x^{n-1} y, ..., y^n``.

    ``x -> a x + c y`` and ``y -> b x + d y``; column ``i`` holds the image of
    ``x^{n-i} y^i``.
    """
    cols = []
    for i in range(n + 1):
        f = _linear_power(m.a, m.c, n - i)
        g = _linear_power(m.b, m.d, i)
        col = [0] * (n + 1)
        for r, fr in enumerate(f):
            if fr:
                for s, gs in enumerate(g):
                    col[r + s] += fr * gs
        cols.append(col)
    return [[cols[j][i] for j in range(n + 1)] for i in range(n + 1)]


def sym_power_trace_oracle(m: IntegerMatrix2, n: int) -> int:
    """Trace of the explicit ``Sym^n`` matrix; independent check on
    :func:`trace_polynomial`."""
    mat = sym_power_matrix(m, n)
    return sum(mat[i][i] for i in range(n + 1))
