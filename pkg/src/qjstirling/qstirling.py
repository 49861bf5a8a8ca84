"""Stirling-type number triangles attached to a sequence of interpolation nodes.

Every family here is a pair of connection coefficients between monomials and
a factorial basis ``prod_{i<k} (x - b_i)`` (or a non-monic variant).  The
triangles are filled by their recurrences; :func:`factorial_basis_oracle`
recomputes them by expansion and triangular solve so each can be checked
independently.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable

from .exactscalars import (
    FormalFraction,
    Laurent,
    RationalFunction,
    evaluate,
    substitute_power,
)
from .qcore import q_binomial, q_bracket, q_bracket_inv, q_factorial, rf

__all__ = [
    "NumberTriangle",
    "OracleResult",
    "FAMILIES",
    "triangle",
    "qstirling",
    "qjs",
    "qjs_signed",
    "qjs_newton",
    "qjs_newton_parts",
    "factorial_basis_oracle",
    "central_factorial",
    "y_version_check",
    "y_version_sides",
    "y_version_literal_check",
    "inverse_check",
    "classical_limit",
    "sym_stirling",
    "wilson",
    "wilson_explicit",
    "askey_wilson",
    "askey_wilson_explicit",
    "askey_wilson_newton",
    "aw_node",
    "ogf_column",
    "classical_js",
    "specialization_check",
    "z_coefficients",
    "nodes",
]

Q = Laurent.gen("q")
Z = Laurent.gen("z")
W_ = Laurent.gen("w")
A = Laurent.gen("a")

N_MAX_UNIVARIATE = 12
N_MAX_BIVARIATE = 8


# ---------------------------------------------------------------------------
# the triangle container
# ---------------------------------------------------------------------------


@dataclass
class NumberTriangle:
    """Lazily filled triangle ``(n, k) -> value`` for ``0 <= k <= n <= n_max``.

    ``step(prev_row, n)`` builds row ``n + 1`` from row ``n``.  Rows are
    tuples and never change once appended, so readers need no lock; a
    single lock serializes writers.
    """

    family: str
    ring: tuple[str, ...]
    step: Callable[[tuple, int], tuple]
    n_max: int
    rows: list = field(default_factory=lambda: [(1,)])
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def zero(self):
        return Laurent.zero(self.ring[0])

    def _lift(self, v):
        if isinstance(v, Laurent):
            return v
        return Laurent.const(self.ring[0], v)

    def row(self, n: int) -> tuple:
        if n < 0:
            raise IndexError(f"negative row index {n}")
        if n > self.n_max:
            raise IndexError(f"row {n} exceeds n_max={self.n_max} for {self.family}")
        rows = self.rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(self.rows) <= n:
                m = len(self.rows) - 1
                self.rows.append(tuple(self._lift(v) for v in self.step(self.rows[m], m)))
        return self.rows[n]

    def __call__(self, n: int, k: int):
        if k < 0 or k > n or n < 0:
            return self.zero()
        return self._lift(self.row(n)[k])

    entry = __call__

    def matrix(self, n: int) -> list[list]:
        return [[self(i, j) for j in range(n + 1)] for i in range(n + 1)]


def _second_kind_step(node: Callable[[int], object]):
    """T(n+1,k+1) = T(n,k) + b_{k+1} T(n,k+1), T(n+1,0) = b_0 T(n,0)."""

    def step(prev, n):
        out = [node(0) * prev[0]]
        for k in range(n + 1):
            below = prev[k + 1] if k + 1 <= n else 0
            out.append(prev[k] + node(k + 1) * below)
        return tuple(out)

    return step


def _first_kind_step(node: Callable[[int], object], positive: bool):
    """Coefficients of prod_{i<n}(x - b_i), optionally times (-1)^{n-k}."""

    def step(prev, n):
        b = node(n) if positive else -node(n)
        out = [b * prev[0]]
        for k in range(n + 1):
            below = prev[k + 1] if k + 1 <= n else 0
            out.append(prev[k] + b * below)
        return tuple(out)

    return step


def _factor_step(factor: Callable[[int], tuple]):
    """Coefficients of prod_{i<n}(c0_i + c1_i x)."""

    def step(prev, n):
        c0, c1 = factor(n)
        out = [c0 * prev[0]]
        for k in range(n + 1):
            below = prev[k + 1] if k + 1 <= n else 0
            out.append(c1 * prev[k] + c0 * below)
        return tuple(out)

    return step


# ---------------------------------------------------------------------------
# nodes
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _node_qstirling(i: int):
    return q_bracket(i)


@lru_cache(maxsize=None)
def _node_qjs(i: int):
    return q_bracket(i) * (Z + q_bracket_inv(i))


@lru_cache(maxsize=None)
def _node_central(i: int):
    return q_bracket(i) * q_bracket_inv(i)


@lru_cache(maxsize=None)
def _node_sym(i: int):
    return (Z + i) * (W_ + i)


@lru_cache(maxsize=None)
def _node_wilson(i: int):
    # nodes in the variable X = x^2
    return -((A + i) ** 2)


@lru_cache(maxsize=None)
def _node_classical(i: int):
    return i * (Z + i)


@lru_cache(maxsize=None)
def aw_node(j: int):
    """``((a q^j)^{-1} + a q^j) / 2``, the j-th zero of the basis factor."""
    return (Laurent("a", {1: Laurent.gen("q", j), -1: Laurent.gen("q", -j)})) * Fraction(1, 2)


@lru_cache(maxsize=None)
def _aw_factor(j: int):
    """``1 + a^2 q^{2j} - 2 a q^j x`` as (constant, x-coefficient)."""
    c0 = Laurent("a", {0: 1, 2: Laurent.gen("q", 2 * j)})
    c1 = Laurent("a", {1: Laurent("q", {j: -2})})
    return c0, c1


def nodes(basis: str, n: int) -> list:
    """First ``n`` interpolation nodes of a named basis."""
    fn = {
        "qstirling": _node_qstirling,
        "qjs": _node_qjs,
        "central": _node_central,
        "sym": _node_sym,
        "wilson": _node_wilson,
        "askeywilson": aw_node,
        "classical": _node_classical,
    }[basis]
    return [fn(i) for i in range(n)]


# ---------------------------------------------------------------------------
# triangle registry
# ---------------------------------------------------------------------------


def _aw_second_step(prev, n):
    # monic-node second kind rescaled by 1/((-2a)^k q^{k(k-1)/2}); see askey_wilson
    k_rows = _T_TRI.row(n + 1)
    return tuple(k_rows[k] * _aw_scale_inv(k) for k in range(n + 2))


@lru_cache(maxsize=None)
def _aw_scale(k: int):
    """``(-2a)^k q^{k(k-1)/2}``."""
    return Laurent("a", {k: Laurent("q", {k * (k - 1) // 2: (-2) ** k})})


@lru_cache(maxsize=None)
def _aw_scale_inv(k: int):
    return _aw_scale(k).inverse()


_T_TRI = NumberTriangle("askeywilson_T", ("a", "q"), _second_kind_step(aw_node), 12)

FAMILIES: dict[str, NumberTriangle] = {
    "qstirling_first": NumberTriangle("qstirling_first", ("q",), _first_kind_step(_node_qstirling, True), N_MAX_UNIVARIATE),
    "qstirling_second": NumberTriangle("qstirling_second", ("q",), _second_kind_step(_node_qstirling), N_MAX_UNIVARIATE),
    "qjs_first": NumberTriangle("qjs_first", ("z", "q"), _first_kind_step(_node_qjs, True), N_MAX_BIVARIATE),
    "qjs_second": NumberTriangle("qjs_second", ("z", "q"), _second_kind_step(_node_qjs), N_MAX_BIVARIATE),
    "central_U": NumberTriangle("central_U", ("q",), _second_kind_step(_node_central), N_MAX_UNIVARIATE),
    "central_V": NumberTriangle("central_V", ("q",), _first_kind_step(_node_central, True), N_MAX_UNIVARIATE),
    "sym_first": NumberTriangle("sym_first", ("z", "w"), _first_kind_step(_node_sym, False), N_MAX_BIVARIATE),
    "sym_second": NumberTriangle("sym_second", ("z", "w"), _second_kind_step(_node_sym), N_MAX_BIVARIATE),
    "wilson_first": NumberTriangle("wilson_first", ("a",), _first_kind_step(_node_wilson, False), N_MAX_UNIVARIATE),
    "wilson_second": NumberTriangle("wilson_second", ("a",), _second_kind_step(_node_wilson), N_MAX_UNIVARIATE),
    "askeywilson_first": NumberTriangle("askeywilson_first", ("a", "q"), _factor_step(_aw_factor), N_MAX_BIVARIATE),
    "askeywilson_second": NumberTriangle("askeywilson_second", ("a", "q"), _aw_second_step, N_MAX_BIVARIATE),
    "askeywilson_T": _T_TRI,
    "classical_js_second": NumberTriangle("classical_js_second", ("z",), _second_kind_step(_node_classical), N_MAX_UNIVARIATE),
    "classical_js_first": NumberTriangle("classical_js_first", ("z",), _first_kind_step(_node_classical, True), N_MAX_UNIVARIATE),
}


def triangle(name: str) -> NumberTriangle:
    try:
        return FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown triangle {name!r}; choose from {sorted(FAMILIES)}") from None


def _kind(kind: str, allowed=("first", "second")) -> str:
    if kind not in allowed:
        raise ValueError(f"kind must be one of {allowed}, got {kind!r}")
    return kind


# ---------------------------------------------------------------------------
# public accessors
# ---------------------------------------------------------------------------


def qstirling(kind: str, n: int, k: int) -> Laurent:
    """``c_q(n,k)`` (first) or ``S_q(n,k)`` (second); both nonnegative."""
    return FAMILIES["qstirling_" + _kind(kind)](n, k)


def qjs(kind: str, n: int, k: int) -> Laurent:
    """``Jc_n^k(z;q)`` or ``JS_n^k(z;q)`` as a polynomial in z over Laurent(q).

    The first kind is the positive quantity; :func:`qjs_signed` gives the
    raw expansion coefficient.
    """
    return FAMILIES["qjs_" + _kind(kind)](n, k)


def qjs_signed(n: int, k: int) -> Laurent:
    """Coefficient of ``x^k`` in ``prod_{i<n}(x - b_i)``."""
    v = qjs("first", n, k)
    return v if (n - k) % 2 == 0 else -v


def z_coefficients(f: Laurent) -> list:
    """Coefficients ``[a^(0), a^(1), ...]`` of a polynomial in z."""
    if not isinstance(f, Laurent) or f.var != "z":
        return [f] if f else []
    if not f.terms:
        return []
    return [f.coeff(i) for i in range(f.degree() + 1)]


def central_factorial(kind: str, n: int, k: int) -> Laurent:
    """``U_q(n,k) = JS_n^k(0;q)`` and ``V_q(n,k) = Jc_n^k(0;q)``."""
    return FAMILIES["central_" + _kind(kind, ("U", "V"))](n, k)


def sym_stirling(kind: str, n: int, k: int) -> Laurent:
    """``S_{z,w}(n,k)`` (second) or the raw coefficient ``s_{z,w}(n,k)`` (first)."""
    return FAMILIES["sym_" + _kind(kind)](n, k)


def wilson(kind: str, n: int, k: int) -> Laurent:
    """``w(n,k) = e_{n-k}(a^2, ..., (a+n-1)^2)`` or its inverse ``W(n,k)``."""
    return FAMILIES["wilson_" + _kind(kind)](n, k)


def askey_wilson(kind: str, n: int, k: int) -> Laurent:
    """``w_q``, ``W_q`` or ``T_q`` as Laurent polynomials in a over Laurent(q)."""
    _kind(kind, ("first", "second", "T"))
    if kind == "T":
        return _T_TRI(n, k)
    return FAMILIES["askeywilson_" + kind](n, k)


def classical_js(kind: str, n: int, k: int) -> Laurent:
    """Jacobi-Stirling numbers (q = 1) from their own recurrence, for cross-checks."""
    return FAMILIES["classical_js_" + _kind(kind)](n, k)


# ---------------------------------------------------------------------------
# basis-change oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    """``first[n][k]`` is the coefficient of x^k in the n-th basis element;
    ``second[n][k]`` expresses x^n in that basis."""

    basis: str
    first: list
    second: list


def _basis_factors(basis: str, n: int) -> list[tuple]:
    if basis == "askeywilson":
        return [_aw_factor(j) for j in range(n)]
    return [(-b, 1) for b in nodes(basis, n)]


def _poly_times_linear(p: list, c0, c1) -> list:
    out = [0] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i] = out[i] + c0 * c
        out[i + 1] = out[i + 1] + c1 * c
    return out


def _unit_inverse(c):
    if isinstance(c, Laurent):
        return c.inverse()
    return Fraction(1) / Fraction(c)


def factorial_basis_oracle(basis: str, n: int) -> OracleResult:
    """Expand the first ``n+1`` basis polynomials and solve for x^0..x^n.

    The leading coefficient of each linear factor must be a unit (a
    monomial), so the back-substitution stays inside the Laurent ring.
    """
    if n > 12:
        raise ValueError("oracle is meant for small n")
    factors = _basis_factors(basis, n)
    polys = [[1]]
    for c0, c1 in factors:
        polys.append(_poly_times_linear(polys[-1], c0, c1))
    lead_inv = [_unit_inverse(p[-1]) for p in polys]
    second = []
    for m in range(n + 1):
        target = [0] * m + [1]
        row = [0] * (m + 1)
        for k in range(m, -1, -1):
            c = target[k] * lead_inv[k]
            row[k] = c
            if c:
                for i, pc in enumerate(polys[k]):
                    target[i] = target[i] - c * pc
        second.append(row)
    first = [list(p) for p in polys]
    return OracleResult(basis, first, second)


# ---------------------------------------------------------------------------
# explicit sums
# ---------------------------------------------------------------------------


def qjs_newton_parts(n: int, j: int) -> tuple[Laurent, Laurent]:
    """Numerator and common denominator of the alternating Newton sum for JS_n^j.

    The common denominator is ``[j]_q! * prod_{m=0}^{2j} (z + [m]_{1/q})``.
    """
    denom = Laurent.const("z", q_factorial(j))
    for m in range(2 * j + 1):
        denom = denom * (Z + q_bracket_inv(m))
    total = Laurent.zero("z")
    for r in range(j + 1):
        node = q_bracket(r) * (q_bracket_inv(r) + Z)
        skipped = set(range(r, j + r + 1)) - {2 * r}
        term = Laurent.const("z", q_binomial(j, r) * Laurent.gen("q", -comb(r, 2) - r * (j - r)))
        term = term * node**n
        for m in range(2 * j + 1):
            if m not in skipped:
                term = term * (Z + q_bracket_inv(m))
        total = total + (term if (j - r) % 2 == 0 else -term)
    return total, denom


def qjs_newton(n: int, j: int) -> FormalFraction:
    """Alternating explicit sum for ``JS_n^j(z;q)`` as an unreduced fraction."""
    num, den = qjs_newton_parts(n, j)
    return FormalFraction(num, den)


def _rising(x, m: int):
    out = 1
    for i in range(m):
        out = out * (x + i)
    return out


def wilson_explicit(kind: str, n: int, k: int):
    """Closed forms: ``e_{n-k}`` of the squares, or the alternating sum for W."""
    if k < 0 or k > n:
        return RationalFunction.zero("a")
    if kind == "first":
        squares = [(A + i) ** 2 for i in range(n)]
        return RationalFunction.from_laurent(_elementary(squares, n - k, "a"))
    a = RationalFunction.gen("a")
    total = RationalFunction.zero("a")
    for r in range(k + 1):
        num = (a + r) ** (2 * n) * (-1) ** (n - r)
        den = RationalFunction.constant("a", factorial(r) * factorial(k - r))
        den = den * _rising(2 * a + r, r) * _rising(2 * a + 2 * r + 1, k - r)
        total = total + num / den
    return total


def _elementary(xs: list, m: int, var: str):
    """Elementary symmetric polynomial e_m of ring elements."""
    e = [Laurent.one(var)] + [Laurent.zero(var)] * m
    for x in xs:
        for i in range(m, 0, -1):
            e[i] = e[i] + e[i - 1] * x
    return e[m]


def _aw_poch(x, j: int):
    out = Laurent.one("a")
    for i in range(j):
        out = out * (1 - x * Laurent.gen("q", i))
    return out


def askey_wilson_explicit(n: int, k: int) -> FormalFraction:
    """Term-by-term Newton-type sum for ``W_q(n,k)``.

    ``2^{-n} sum_j q^{k-j^2} a^{-2j} (q^j a + q^{-j}/a)^n /
    ((q, q^{1-2j}/a^2; q)_j (q, q^{2j+1} a^2; q)_{k-j})``
    """
    num = Laurent.zero("a")
    den = Laurent.one("a")
    for j in range(k + 1):
        top = Laurent("a", {-2 * j: Laurent.gen("q", k - j * j)}) * Laurent(
            "a", {1: Laurent.gen("q", j), -1: Laurent.gen("q", -j)}
        ) ** n
        qpoch_j = Laurent.const("a", _q_poch_q(j))
        qpoch_kj = Laurent.const("a", _q_poch_q(k - j))
        bottom = (
            qpoch_j
            * _aw_poch(Laurent("a", {-2: Laurent.gen("q", 1 - 2 * j)}), j)
            * qpoch_kj
            * _aw_poch(Laurent("a", {2: Laurent.gen("q", 2 * j + 1)}), k - j)
        )
        num = num * bottom + top * den
        den = den * bottom
    return FormalFraction(num, den * 2**n)


def _q_poch_q(j: int) -> Laurent:
    out = Laurent.one("q")
    for i in range(j):
        out = out * (1 - Laurent.gen("q", i + 1))
    return out


def askey_wilson_newton(n: int, k: int) -> FormalFraction:
    """Newton interpolation for ``W_q(n,k)`` from the nodes ``aw_node(j)``.

    ``T_q(n,k) = sum_j c_j^n / prod_{m != j} (c_j - c_m)`` and
    ``W_q = T_q / ((-2a)^k q^{k(k-1)/2})``.
    """
    c = [aw_node(j) for j in range(k + 1)]
    num = Laurent.zero("a")
    den = Laurent.one("a")
    for j in range(k + 1):
        d = Laurent.one("a")
        for m in range(k + 1):
            if m != j:
                d = d * (c[j] - c[m])
        num = num * d + c[j] ** n * den
        den = den * d
    return FormalFraction(num, den * _aw_scale(k))


# ---------------------------------------------------------------------------
# identities between families
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _y_stirling(n: int) -> tuple:
    """Rows of ``S_q(n,k,Y)`` with ``Y = 1/y``: nodes ``[j]_q (1 - y^{-1} q^{-j})``."""
    node = lambda j: Laurent("y", {0: q_bracket(j), -1: -q_bracket(j) * Laurent.gen("q", -j)})
    tri = NumberTriangle("y_stirling", ("y", "q"), _second_kind_step(node), 12)
    return tuple(tri.row(m) for m in range(n + 1))


def y_version_sides(n: int, k: int) -> tuple[Laurent, Laurent]:
    """Both sides of the y-rescaling identity after clearing ``(q-1)^{n-k}``.

    Left: ``(q-1)^{n-k} JS_n^k(z;q)`` with ``z = q(y-1)/(q-1)``.
    Right: ``q^{n-k} y^{n-k} S_q(n,k,1/y)``.
    """
    if k < 0 or k > n:
        return Laurent.zero("y"), Laurent.zero("y")
    d = n - k
    y = Laurent.gen("y")
    qm1 = Laurent("q", {0: -1, 1: 1})
    lhs = Laurent.zero("y")
    for i, a_i in enumerate(z_coefficients(qjs("second", n, k))):
        lhs = lhs + a_i * (Q * (y - 1)) ** i * qm1 ** (d - i)
    s = _y_stirling(n)[n][k]
    rhs = s * Laurent("y", {d: Laurent.gen("q", d)})
    return lhs, rhs


def y_version_check(n: int, k: int) -> bool:
    """``JS_n^k(z;q) = S_q(n,k,1/y) (y/(1-1/q))^{n-k}`` with ``z = (y-1)/(1-1/q)``."""
    lhs, rhs = y_version_sides(n, k)
    return lhs == rhs


def y_version_literal_check(n: int, k: int) -> bool:
    """Same identity with the factor ``y^{n-k} (1-1/q)^k`` instead."""
    lhs, rhs = y_version_sides(n, k)
    # lhs/(q-1)^{n-k} == S y^{n-k} (1-1/q)^k  <=>  lhs q^k == S y^{n-k} (q-1)^n ... compared exactly
    d = n - k
    qm1 = Laurent("q", {0: -1, 1: 1})
    s_y = rhs * Laurent("y", {0: Laurent.gen("q", -d)})  # S y^{n-k}
    return lhs * Laurent.gen("q", k) == s_y * qm1**n


def specialization_check(kind: str, n: int, k: int) -> bool:
    """``JS_n^k(1/(q-1); 1/q) = (q/(q-1))^{n-k} S_q(n,k)`` in Q(q), and the Jc analogue."""
    _kind(kind)
    f = qjs(kind, n, k)
    zval = RationalFunction.from_laurent(Laurent("q", {0: -1, 1: 1})).inverse()
    lhs = RationalFunction.zero("q")
    power = RationalFunction.constant("q", 1)
    for a_i in z_coefficients(f):
        lhs = lhs + rf(substitute_power(a_i, -1)) * power
        power = power * zval
    lam = rf(Q) * zval
    rhs = lam ** (n - k) * rf(qstirling(kind, n, k))
    return lhs == rhs


# ---------------------------------------------------------------------------
# generating functions
# ---------------------------------------------------------------------------


def ogf_column(family: str, k: int, N: int) -> dict[int, Laurent]:
    """Coefficients of x^k..x^N in ``x^k prod_{i=0}^{k} 1/(1 - b_i x)``."""
    basis = {"qjs_second": "qjs", "sym_second": "sym"}.get(family)
    if basis is None:
        raise ValueError(f"unsupported family {family!r}")
    if not 0 <= k <= N:
        raise ValueError("need 0 <= k <= N")
    var = "z"
    length = N - k + 1
    series = [Laurent.one(var)] + [Laurent.zero(var)] * (length - 1)
    for b in nodes(basis, k + 1):
        if not b:
            continue
        for m in range(1, length):
            series[m] = series[m] + b * series[m - 1]
    return {k + m: series[m] for m in range(length)}


def inverse_check(first: list, second: list) -> bool:
    """True when the two square matrices multiply to the identity both ways."""
    n = len(first)
    for i in range(n):
        for j in range(n):
            s1 = 0
            s2 = 0
            for m in range(n):
                s1 = s1 + first[i][m] * second[m][j]
                s2 = s2 + second[i][m] * first[m][j]
            want = 1 if i == j else 0
            if s1 != want or s2 != want:
                return False
    return True


def classical_limit(f):
    """Set q = 1 in every coefficient."""
    return evaluate(f, 1, "q")
