"""q-brackets, q-factorials, Gaussian binomials and q-shifted factorials.

All results are :class:`Laurent` polynomials in ``q``.  Caching goes through
:func:`functools.lru_cache`, whose thread-safety guarantee (a value may be
computed twice, never torn) is all that is needed here.
"""

from __future__ import annotations

from functools import lru_cache

from .exactscalars import Laurent, RationalFunction, substitute_power

__all__ = [
    "Q",
    "q_bracket",
    "q_bracket_inv",
    "q_factorial",
    "q_binomial",
    "q_rising",
    "q_pochhammer_poly",
    "q_pochhammer",
    "to_base",
    "rf",
]

Q = Laurent.gen("q")


@lru_cache(maxsize=None)
def q_bracket(n: int) -> Laurent:
    """``[n]_q = (q^n - 1)/(q - 1)`` expanded as a Laurent polynomial."""
    if n >= 0:
        return Laurent("q", {i: 1 for i in range(n)})
    return Laurent("q", {i: -1 for i in range(n, 0)})


@lru_cache(maxsize=None)
def q_bracket_inv(n: int) -> Laurent:
    """``[n]_{1/q}``."""
    return substitute_power(q_bracket(n), -1)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> Laurent:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = Laurent.one("q")
    for i in range(2, n + 1):
        out = out * q_bracket(i)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> Laurent:
    """Gaussian binomial coefficient; zero outside ``0 <= k <= n``."""
    if k < 0 or k > n or n < 0:
        return Laurent.zero("q")
    if k == 0 or k == n:
        return Laurent.one("q")
    return q_factorial(n).exact_divide(q_factorial(k) * q_factorial(n - k))


@lru_cache(maxsize=None)
def q_rising(a: int, n: int) -> Laurent:
    """``[a;q]_n``, the product of ``[a+j]_q`` for ``0 <= j < n``."""
    if n < 0:
        raise ValueError("q_rising needs n >= 0")
    out = Laurent.one("q")
    for j in range(n):
        out = out * q_bracket(a + j)
    return out


@lru_cache(maxsize=None)
def q_pochhammer_poly(k: int) -> Laurent:
    """``(t;q)_k`` as a polynomial in ``t`` with coefficients in ``q``."""
    out = Laurent.one("t")
    for i in range(k):
        out = out * Laurent("t", {0: 1, 1: -Laurent.gen("q", i)})
    return out


def q_pochhammer(x, k: int):
    """``(x;q)_k`` for a ring element ``x``."""
    out = 1
    for i in range(k):
        out = out * (1 - x * Laurent.gen("q", i))
    return out


def to_base(f, d: int):
    """Rewrite a polynomial in ``q`` in the variable ``v`` with ``q = v**d``.

    Inner ``q`` coefficients of nested polynomials are rewritten too.
    """
    if d == 1:
        return f
    if isinstance(f, Laurent):
        if f.var == "q":
            return Laurent("v", {e * d: c for e, c in f.terms.items()})
        return f.map_coefficients(lambda c: to_base(c, d))
    if isinstance(f, RationalFunction):
        return f.substitute_power(d).rename("v") if f.var == "q" else f
    return f


def rf(f) -> RationalFunction:
    """Lift a univariate Laurent polynomial or rational to a rational function."""
    if isinstance(f, RationalFunction):
        return f
    if isinstance(f, Laurent):
        return RationalFunction.from_laurent(f)
    return RationalFunction.constant("q", f)
