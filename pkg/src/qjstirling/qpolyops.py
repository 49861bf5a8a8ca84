"""Polynomials in x over Q(v) and q-difference operators acting on them.

The scalar field is ``Q(v)`` with ``q = v**d``; ``d = 2`` lets half-integer
powers of ``q`` stay exact.  Operators are extensional: a
:class:`QDiffOperator` is a composable linear map, and two operators are
compared by applying both to ``1, x, ..., x**M``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .exactscalars import Laurent, RationalFunction, render, substitute_power, to_json

__all__ = [
    "BASE_VAR",
    "OperatorError",
    "XPolynomial",
    "QDiffOperator",
    "scalar",
    "qpow",
    "bracket",
    "bracket_inv",
    "factorial",
    "binomial",
    "specialize",
    "dq",
    "jackson",
    "dilate",
    "identity",
    "multiply",
    "Dq",
    "Dq_inv",
    "dilation",
    "q_leibniz_check",
    "build_Lq",
    "build_Lkq",
    "operator_pow",
    "agree_on_monomials",
    "expansion_check",
]

BASE_VAR = "v"


class OperatorError(ValueError):
    """Raised for malformed operator data (wrong degrees, mixed bases)."""


# ---------------------------------------------------------------------------
# scalars in Q(v)
# ---------------------------------------------------------------------------


def scalar(c) -> RationalFunction:
    """Coerce a rational, a Laurent polynomial in v, or an element of Q(v)."""
    if isinstance(c, RationalFunction):
        if c.var != BASE_VAR:
            raise OperatorError(f"scalar lives in Q({c.var}), expected Q({BASE_VAR})")
        return c
    if isinstance(c, Laurent):
        if c.var != BASE_VAR and c.terms and not c.is_constant():
            raise OperatorError(f"scalar lives in {c.var!r}, expected {BASE_VAR!r}")
        if c.var != BASE_VAR:
            return RationalFunction.constant(BASE_VAR, c.constant_term())
        return RationalFunction.from_laurent(c)
    return RationalFunction.constant(BASE_VAR, c)


_ZERO = RationalFunction.zero(BASE_VAR)
_ONE = RationalFunction.constant(BASE_VAR, 1)


@lru_cache(maxsize=None)
def qpow(e, d: int = 1) -> RationalFunction:
    """``q**e`` written in v; ``e`` may be a half-integer when ``d`` is even."""
    s = Fraction(e) * d
    if s.denominator != 1:
        raise OperatorError(f"q^{e} is not a power of v when q = v^{d}")
    return RationalFunction.gen(BASE_VAR, int(s))


@lru_cache(maxsize=None)
def bracket(n: int, d: int = 1, m: int = 1) -> RationalFunction:
    """``[n]_{q^m}`` in v; negative ``n`` follows ``[n] = (q^{mn}-1)/(q^m-1)``."""
    if n >= 0:
        terms = {d * m * i: 1 for i in range(n)}
    else:
        terms = {d * m * i: -1 for i in range(n, 0)}
    return scalar(Laurent(BASE_VAR, terms))


def bracket_inv(n: int, d: int = 1) -> RationalFunction:
    return bracket(n, d, -1)


@lru_cache(maxsize=None)
def factorial(n: int, d: int = 1) -> RationalFunction:
    out = _ONE
    for i in range(2, n + 1):
        out = out * bracket(i, d)
    return out


def binomial(n: int, k: int, d: int = 1) -> RationalFunction:
    if k < 0 or k > n:
        return _ZERO
    return factorial(n, d) / (factorial(k, d) * factorial(n - k, d))


def specialize(f, d: int = 1, z=None, invert: bool = False) -> RationalFunction:
    """Map a number-triangle entry (Laurent in q, possibly nested under z) into Q(v).

    ``invert`` replaces q by 1/q first; ``z`` is the value substituted for z.
    """
    if isinstance(f, Laurent) and f.var == "z":
        if z is None:
            raise OperatorError("value for z required")
        out = _ZERO
        zz = scalar(z)
        for e, c in sorted(f.terms.items()):
            out = out + specialize(c, d, invert=invert) * zz**e
        return out
    if isinstance(f, Laurent) and f.var == "q":
        g = substitute_power(f, -d if invert else d)
        return scalar(g.rename(BASE_VAR))
    return scalar(f)


# ---------------------------------------------------------------------------
# polynomials in x
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class XPolynomial:
    """``sum coeffs[i] x**i`` with coefficients in Q(v), ``q = v**d``.

    Trailing zeros are stripped, so the leading coefficient is nonzero and
    the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple
    d: int = 1

    def __post_init__(self):
        cs = [scalar(c) for c in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # construction
    @classmethod
    def zero(cls, d: int = 1) -> "XPolynomial":
        return cls((), d)

    @classmethod
    def constant(cls, c, d: int = 1) -> "XPolynomial":
        return cls((c,), d)

    @classmethod
    def monomial(cls, n: int, c=1, d: int = 1) -> "XPolynomial":
        return cls((0,) * n + (c,), d)

    @classmethod
    def from_roots(cls, roots: Iterable, d: int = 1) -> "XPolynomial":
        out = cls.constant(1, d)
        for r in roots:
            out = out * cls((-scalar(r), 1), d)
        return out

    # queries
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> RationalFunction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def leading(self) -> RationalFunction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == _ONE

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other: "XPolynomial"):
        if other.d != self.d:
            raise OperatorError(f"mixed bases q = v^{self.d} and q = v^{other.d}")

    def _lift(self, other):
        if isinstance(other, XPolynomial):
            self._check(other)
            return other
        try:
            return XPolynomial.constant(scalar(other), self.d)
        except (OperatorError, TypeError):
            return None

    # arithmetic
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return XPolynomial(tuple(self.coeff(i) + o.coeff(i) for i in range(n)), self.d)

    __radd__ = __add__

    def __neg__(self):
        return XPolynomial(tuple(-c for c in self.coeffs), self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if not isinstance(other, XPolynomial):
            try:
                c = scalar(other)
            except (OperatorError, TypeError):
                return NotImplemented
            return XPolynomial(tuple(c * a for a in self.coeffs), self.d)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return XPolynomial.zero(self.d)
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return XPolynomial(tuple(out), self.d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = XPolynomial.constant(1, self.d)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, XPolynomial):
            return self.d == other.d and self.coeffs == other.coeffs
        o = self._lift(other)
        return o is not None and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.d, self.coeffs))

    def __call__(self, x):
        """Horner evaluation at a scalar or at another polynomial."""
        out = XPolynomial.zero(self.d) if isinstance(x, XPolynomial) else _ZERO
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def derivative_monomial_rule(self, rule: Callable[[int], RationalFunction]) -> "XPolynomial":
        """``x^n -> rule(n) x^{n-1}``."""
        return XPolynomial(tuple(self.coeffs[n] * rule(n) for n in range(1, len(self.coeffs))), self.d)

    def evaluate(self, point) -> "XPolynomial":
        """Evaluate v at a rational, coefficientwise (for spot checks)."""
        return XPolynomial(tuple(c.evaluate(point) for c in self.coeffs), 1)

    def to_json(self):
        return {"base": f"q=v^{self.d}", "coeffs": [to_json(c) for c in self.coeffs]}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            s = render(c)
            if i == 0:
                parts.append(s)
                continue
            mono = "x" if i == 1 else f"x^{i}"
            if s == "1":
                parts.append(mono)
            elif s == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({s})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"XPolynomial({self})"


# ---------------------------------------------------------------------------
# Jackson derivatives and dilations
# ---------------------------------------------------------------------------


def jackson(f: XPolynomial, m: int = 1) -> XPolynomial:
    """``D_{q^m}``: ``x^n -> [n]_{q^m} x^{n-1}``."""
    return f.derivative_monomial_rule(lambda n: bracket(n, f.d, m))


def dq(f: XPolynomial, direction: str = "q") -> XPolynomial:
    if direction == "q":
        return jackson(f, 1)
    if direction in ("q_inverse", "q_inv", "inverse"):
        return jackson(f, -1)
    raise ValueError(f"direction must be 'q' or 'q_inverse', got {direction!r}")


def dilate(f: XPolynomial, m) -> XPolynomial:
    """``f(x) -> f(q^m x)``."""
    return XPolynomial(tuple(c * qpow(m * n, f.d) for n, c in enumerate(f.coeffs)), f.d)


class QDiffOperator:
    """A linear map on :class:`XPolynomial` built from a few generators.

    ``A @ B`` applies B first.  Scalars and polynomials on the left of ``*``
    multiply the output.
    """

    __slots__ = ("fn", "label")

    def __init__(self, fn: Callable[[XPolynomial], XPolynomial], label: str = "op"):
        self.fn = fn
        self.label = label

    def __call__(self, f: XPolynomial) -> XPolynomial:
        return self.fn(f)

    def __matmul__(self, other: "QDiffOperator") -> "QDiffOperator":
        return QDiffOperator(lambda f: self.fn(other.fn(f)), f"{self.label}∘{other.label}")

    def __add__(self, other: "QDiffOperator") -> "QDiffOperator":
        return QDiffOperator(lambda f: self.fn(f) + other.fn(f), f"({self.label}+{other.label})")

    def __sub__(self, other: "QDiffOperator") -> "QDiffOperator":
        return QDiffOperator(lambda f: self.fn(f) - other.fn(f), f"({self.label}-{other.label})")

    def __neg__(self):
        return QDiffOperator(lambda f: -self.fn(f), f"-{self.label}")

    def __rmul__(self, c) -> "QDiffOperator":
        if isinstance(c, XPolynomial):
            return QDiffOperator(lambda f: c * self.fn(f), f"[{c}]{self.label}")
        s = scalar(c)
        return QDiffOperator(lambda f: self.fn(f) * s, f"{render(s)}·{self.label}")

    def __pow__(self, k: int) -> "QDiffOperator":
        return operator_pow(self, k)

    def __repr__(self):
        return f"QDiffOperator({self.label})"


def identity() -> QDiffOperator:
    return QDiffOperator(lambda f: f, "I")


def multiply(p: XPolynomial) -> QDiffOperator:
    return QDiffOperator(lambda f: p * f, f"[{p}]")


def Dq(m: int = 1) -> QDiffOperator:
    return QDiffOperator(lambda f: jackson(f, m), "Dq" if m == 1 else f"D_q^{m}")


def Dq_inv() -> QDiffOperator:
    return QDiffOperator(lambda f: jackson(f, -1), "Dq⁻¹")


def dilation(m) -> QDiffOperator:
    return QDiffOperator(lambda f: dilate(f, m), f"dil({m})")


def operator_pow(op: QDiffOperator, k: int) -> QDiffOperator:
    if k < 0:
        raise ValueError("operator power needs k >= 0")
    if k == 0:
        return identity()

    def run(f):
        for _ in range(k):
            f = op.fn(f)
        return f

    return QDiffOperator(run, f"{op.label}^{k}")


def agree_on_monomials(a: QDiffOperator, b: QDiffOperator, M: int, d: int = 1):
    """First ``m <= M`` where ``a(x^m) != b(x^m)``, or None."""
    for m in range(M + 1):
        x = XPolynomial.monomial(m, d=d)
        if a(x) != b(x):
            return m
    return None


def q_leibniz_check(f: XPolynomial, g: XPolynomial, n: int) -> bool:
    """``D_q^n(fg) = sum_k [n,k]_q (D_q^{n-k} f)(q^k x) (D_q^k g)(x)``."""
    f._check(g)
    lhs = f * g
    for _ in range(n):
        lhs = jackson(lhs)
    fd = [f]
    gd = [g]
    for _ in range(n):
        fd.append(jackson(fd[-1]))
        gd.append(jackson(gd[-1]))
    rhs = XPolynomial.zero(f.d)
    for k in range(n + 1):
        rhs = rhs + dilate(fd[n - k], k) * gd[k] * binomial(n, k, f.d)
    return lhs == rhs


# ---------------------------------------------------------------------------
# the second-order operator and its even-order relatives
# ---------------------------------------------------------------------------


def build_Lq(phi: XPolynomial, psi: XPolynomial) -> QDiffOperator:
    """``Phi D_q D_{1/q} - Psi D_{1/q}``."""
    if phi.is_zero() or phi.degree > 2:
        raise OperatorError(f"Phi must be nonzero of degree <= 2, got degree {phi.degree}")
    if psi.degree != 1:
        raise OperatorError(f"Psi must have degree 1, got degree {psi.degree}")
    phi._check(psi)

    def run(f: XPolynomial) -> XPolynomial:
        g = jackson(f, -1)
        return phi * jackson(g, 1) - psi * g

    return QDiffOperator(run, "L_q")


def build_Lkq(family, k: int, literal: bool = False) -> QDiffOperator:
    """Order-2k operator whose eigenvalues on the family's sequence are ``even_order_eigenvalue(n, k)``.

    The coefficient of the nu-th term carries ``1/[nu]_q!``; ``literal=True``
    drops it, which only agrees for ``k <= 1``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return identity()
    from .qfamilies import shifted_eigenvalue  # cyclic at import time

    d = family.d
    deg = family.phi.degree
    Pk = family.pn(k)
    derivs = [Pk]
    for _ in range(k):
        derivs.append(jackson(derivs[-1]))
    lambdas = []
    for nu in range(k + 1):
        c = qpow(-(k - nu) * (nu + 1), d) / factorial(k - nu, d)
        if not literal:
            c = c / factorial(nu, d)
        for sigma in range(1, nu + 1):
            c = c * shifted_eigenvalue(family, sigma, k - sigma)
        poly = XPolynomial.constant(c, d)
        for sigma in range(k - nu):
            poly = poly * dilate(family.phi, sigma) * qpow(-sigma * deg, d)
        lambdas.append(poly * derivs[k - nu])

    def run(f: XPolynomial) -> XPolynomial:
        g = f
        for _ in range(k):
            g = jackson(g, 1)
        out = XPolynomial.zero(d)
        h = g
        inv_derivs = [g]
        for _ in range(k):
            h = jackson(h, -1)
            inv_derivs.append(h)
        for nu, lam in enumerate(lambdas):
            if lam:
                out = out + lam * dilate(inv_derivs[k - nu], -nu)
        return out

    return QDiffOperator(run, f"L_{{{k};q}}")


def expansion_check(family, k: int, direction: str, M: int):
    """Compare ``L_q^k`` with its expansion in the ``L_{j;q}`` (or the reverse).

    Returns ``(ok, first_bad_m)``; ``first_bad_m`` is None on success.
    """
    from .qfamilies import psi_slope

    from .qstirling import qjs, qjs_signed, qstirling

    d = family.d
    deg = family.phi.degree
    slope = psi_slope(family)
    Lq = family.Lq()
    if direction == "power_to_Lkq":
        lhs = operator_pow(Lq, k)
        terms = []
        for j in range(k + 1):
            if deg < 2:
                c = specialize(qstirling("second", k, j), d, invert=True)
                c = c * qpow(Fraction((deg - 1) * j * (j - 1), 2), d) * (-slope) ** (k - j)
            else:
                z = -(1 + qpow(1, d) * slope)
                c = specialize(qjs("second", k, j), d, z=z, invert=True)
                c = c * qpow(Fraction(j * (j + 1), 2) - k, d)
            terms.append((c, build_Lkq(family, j)))
    elif direction == "Lkq_to_power":
        lhs = build_Lkq(family, k)
        terms = []
        for j in range(k + 1):
            sign = -1 if (k - j) % 2 else 1
            if deg < 2:
                c = specialize(qstirling("first", k, j), d, invert=True) * sign
                c = c * qpow(Fraction((1 - deg) * k * (k - 1), 2), d) * (-slope) ** (k - j)
            else:
                z = -(1 + qpow(1, d) * slope)
                c = specialize(qjs_signed(k, j), d, z=z, invert=True)
                c = c * qpow(j - Fraction(k * (k + 1), 2), d)
            terms.append((c, operator_pow(Lq, j)))
    else:
        raise ValueError(f"unknown direction {direction!r}")

    def rhs(f):
        out = XPolynomial.zero(d)
        for c, op in terms:
            if c:
                out = out + op(f) * c
        return out

    bad = agree_on_monomials(lhs, QDiffOperator(rhs, "expansion"), M, d)
    return bad is None, bad
