from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qjstirling.exactscalars import Laurent, evaluate
from qjstirling.qcore import (
    q_binomial,
    q_bracket,
    q_bracket_inv,
    q_factorial,
    q_pochhammer,
    q_pochhammer_poly,
    q_rising,
    to_base,
)

q = Laurent.gen("q")


def test_small_values():
    assert q_bracket(0) == 0
    assert q_bracket(3) == 1 + q + q**2
    assert q_bracket_inv(3) == 1 + q**-1 + q**-2
    assert q_factorial(3) == (1 + q) * (1 + q + q**2)
    assert q_binomial(4, 2) == 1 + q + 2 * q**2 + q**3 + q**4
    assert q_binomial(3, 5) == 0
    assert q_rising(2, 2) == q_bracket(2) * q_bracket(3)


@given(st.integers(0, 9), st.integers(0, 9))
def test_pascal(n, k):
    if k == 0 or k > n:
        return
    assert q_binomial(n, k) == q_binomial(n - 1, k - 1) + q**k * q_binomial(n - 1, k)


@given(st.integers(0, 12))
def test_bracket_symmetry_and_limit(n):
    assert q_bracket(n) == q ** (n - 1) * q_bracket_inv(n)
    assert evaluate(q_bracket(n), 1) == n
    assert evaluate(q_factorial(n), 1) == math.factorial(n)


def test_pochhammer():
    t = Laurent.gen("t")
    assert q_pochhammer_poly(2) == (1 - t) * (1 - q * t)
    assert evaluate(q_pochhammer(Fraction(1, 3), 2), 2, "q") == Fraction(2, 3) * Fraction(1, 3)
    assert evaluate(q_pochhammer(Fraction(1, 2), 3), 2, "q") == 0
    assert q_pochhammer(q, 2) == (1 - q) * (1 - q**2)


def test_to_base():
    v = Laurent.gen("v")
    assert to_base(q_bracket(2), 2) == 1 + v**2
    assert to_base(q_bracket(2), 1) == q_bracket(2)


def test_negative_arguments_rejected():
    with pytest.raises(ValueError):
        q_rising(1, -1)
