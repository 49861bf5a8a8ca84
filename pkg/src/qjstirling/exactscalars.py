"""Exact scalar tower: rationals, sparse Laurent polynomials, rational functions.

Rationals are :class:`fractions.Fraction`.  A :class:`Laurent` is a finitely
supported map ``exponent -> coefficient`` in one named variable; coefficients
are rationals or Laurent polynomials in an *inner* variable, which is how
bivariate content such as ``(z, q)`` is represented.  Which variable sits
inside which is fixed by :data:`VARIABLE_ORDER`.

:class:`RationalFunction` is a normalized quotient of univariate polynomials
over the rationals, with canonical (hence decidable) equality.  Nested
quotients are only needed for equality tests and live in
:class:`FormalFraction`, which compares by cross-multiplication.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "Rational",
    "Laurent",
    "RationalFunction",
    "FormalFraction",
    "VARIABLE_ORDER",
    "ScalarError",
    "RingMismatchError",
    "InvalidSubstitutionError",
    "EvaluationError",
    "NotExactError",
    "laurent_combine",
    "fraction_normalize",
    "substitute_power",
    "evaluate",
    "to_json",
    "from_json",
    "render",
]

Rational = Fraction

# innermost first; a variable may only carry coefficients in variables listed before it
VARIABLE_ORDER: tuple[str, ...] = ("v", "q", "b", "w", "y", "a", "z", "x", "t")


class ScalarError(ArithmeticError):
    """Base class for errors raised by the scalar tower."""


class RingMismatchError(ScalarError, TypeError):
    pass


class InvalidSubstitutionError(ScalarError, ValueError):
    pass


class EvaluationError(ScalarError, ZeroDivisionError):
    pass


class NotExactError(ScalarError, ValueError):
    """A division that was required to be exact left a remainder."""


def _rank(var: str) -> int:
    try:
        return VARIABLE_ORDER.index(var)
    except ValueError:
        raise RingMismatchError(f"unknown variable {var!r}") from None


def _is_number(x) -> bool:
    return isinstance(x, (int, Fraction)) or isinstance(x, _RationalABC)


def _clean_number(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class Laurent:
    """Sparse Laurent polynomial in ``var``.

    ``Laurent("q", {-1: 1, 0: 3, 1: 1})`` is ``q^-1 + 3 + q``.  Coefficients
    may themselves be :class:`Laurent` objects in a variable of lower rank.
    Instances are immutable.
    """

    __slots__ = ("var", "terms", "_hash")

    def __init__(self, var: str, terms=None):
        _rank(var)
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                if not isinstance(e, int):
                    raise TypeError(f"exponent {e!r} is not an integer")
                if isinstance(c, Laurent):
                    if _rank(c.var) >= _rank(var):
                        raise RingMismatchError(
                            f"coefficient in {c.var!r} cannot sit inside {var!r}"
                        )
                    if c.is_constant():
                        c = c.constant_term()
                elif _is_number(c):
                    c = _clean_number(Fraction(c) if not isinstance(c, int) else c)
                else:
                    raise TypeError(f"unsupported coefficient {c!r}")
                if c:
                    clean[e] = c
        self.var = var
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, var, terms):
        obj = cls.__new__(cls)
        obj.var = var
        obj.terms = terms
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------
    @classmethod
    def gen(cls, var: str, exp: int = 1) -> "Laurent":
        return cls._raw(var, {exp: 1})

    @classmethod
    def const(cls, var: str, c) -> "Laurent":
        return cls(var, {0: c})

    @classmethod
    def zero(cls, var: str) -> "Laurent":
        return cls._raw(var, {})

    @classmethod
    def one(cls, var: str) -> "Laurent":
        return cls._raw(var, {0: 1})

    # -- inspection ---------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self):
        return self.terms.get(0, 0)

    def coeff(self, e: int):
        return self.terms.get(e, 0)

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(self.terms)

    def valuation(self) -> int:
        if not self.terms:
            raise ValueError("valuation of the zero polynomial")
        return min(self.terms)

    def exponents(self) -> list[int]:
        return sorted(self.terms)

    def is_monomial(self) -> bool:
        if len(self.terms) != 1:
            return False
        (c,) = self.terms.values()
        return not isinstance(c, Laurent) or c.is_monomial()

    def variables(self) -> tuple[str, ...]:
        inner = set()
        for c in self.terms.values():
            if isinstance(c, Laurent):
                inner.update(c.variables())
        return (self.var,) + tuple(sorted(inner, key=_rank, reverse=True))

    def is_polynomial(self) -> bool:
        """True when no exponent (at any nesting level) is negative."""
        for e, c in self.terms.items():
            if e < 0 or (isinstance(c, Laurent) and not c.is_polynomial()):
                return False
        return True

    # -- coercion -----------------------------------------------------------
    def _as_inner(self, other):
        """Return ``other`` if it is a constant of this ring, else None."""
        if _is_number(other):
            return other
        if isinstance(other, Laurent):
            if other.var == self.var:
                return None
            if _rank(other.var) < _rank(self.var):
                return other
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Laurent) and other.var == self.var:
            out = dict(self.terms)
            for e, c in other.terms.items():
                s = out.get(e, 0) + c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
            return Laurent._raw(self.var, out)
        c = self._as_inner(other)
        if c is NotImplemented:
            if isinstance(other, Laurent):
                return other.__add__(self)
            return NotImplemented
        if not c:
            return self
        out = dict(self.terms)
        s = out.get(0, 0) + c
        if isinstance(s, Laurent) and s.is_constant():
            s = s.constant_term()
        if s:
            out[0] = s
        else:
            out.pop(0, None)
        return Laurent._raw(self.var, out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent._raw(self.var, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, (Laurent, int, Fraction)) or _is_number(other):
            neg = -other
            return self.__add__(neg)
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Laurent) and other.var == self.var:
            if len(self.terms) > len(other.terms):
                a, b = self.terms, other.terms
            else:
                a, b = other.terms, self.terms
            out = {}
            get = out.get
            for e2, c2 in b.items():
                for e1, c1 in a.items():
                    e = e1 + e2
                    out[e] = get(e, 0) + c1 * c2
            return Laurent._raw(self.var, _strip(out))
        c = self._as_inner(other)
        if c is NotImplemented:
            if isinstance(other, Laurent):
                return other.__mul__(self)
            return NotImplemented
        if not c:
            return Laurent._raw(self.var, {})
        if c == 1:
            return self
        return Laurent._raw(self.var, _strip({e: v * c for e, v in self.terms.items()}))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Laurent.one(self.var)
        base = self
        if len(self.terms) == 1:
            ((e, c),) = self.terms.items()
            return Laurent._raw(self.var, {e * n: c**n}) if n else result
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "Laurent":
        """Inverse of a unit (a monomial whose coefficient is a unit)."""
        if len(self.terms) != 1:
            raise NotExactError(f"{self} is not a unit of the Laurent ring")
        ((e, c),) = self.terms.items()
        if isinstance(c, Laurent):
            inv = c.inverse()
        else:
            inv = _clean_number(Fraction(1) / c)
        return Laurent._raw(self.var, {-e: inv})

    def __truediv__(self, other):
        if _is_number(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            inv = _clean_number(Fraction(1) / Fraction(other))
            return self * inv
        if isinstance(other, Laurent):
            if other.is_monomial():
                return self * other.inverse()
            return self.exact_divide(other)
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def exact_divide(self, other: "Laurent") -> "Laurent":
        """Quotient ``self / other`` when it is a Laurent polynomial.

        Long division on the outer variable; the leading coefficient of
        ``other`` must divide exactly at every step.
        """
        if not isinstance(other, Laurent):
            return self / other
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if other.var != self.var:
            if _rank(other.var) < _rank(self.var):
                return Laurent._raw(
                    self.var, _strip({e: _exact_div_coeff(c, other) for e, c in self.terms.items()})
                )
            return Laurent.const(other.var, self).exact_divide(other)
        if other.is_monomial():
            return self * other.inverse()
        rem = dict(self.terms)
        dlead = other.degree()
        dlow = other.valuation()
        lc = other.terms[dlead]
        quot = {}
        while rem:
            top = max(rem)
            if top - dlead < min(rem) - dlow:
                break
            c = _exact_div_coeff(rem[top], lc)
            shift = top - dlead
            quot[shift] = c
            for e, oc in other.terms.items():
                k = e + shift
                s = rem.get(k, 0) - c * oc
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        if rem:
            raise NotExactError(f"{self} is not divisible by {other}")
        return Laurent._raw(self.var, quot)

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Laurent):
            if other.var == self.var:
                return self.terms == other.terms
            if _rank(other.var) < _rank(self.var):
                return self.terms == ({0: other} if other else {})
            return other.__eq__(self)
        if _is_number(other):
            if not other:
                return not self.terms
            return len(self.terms) == 1 and self.terms.get(0) == other
        if isinstance(other, (RationalFunction, FormalFraction)):
            return other == self
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            if not self.terms:
                self._hash = hash(0)
            elif len(self.terms) == 1 and 0 in self.terms:
                self._hash = hash(self.terms[0])
            else:
                self._hash = hash((self.var, frozenset(self.terms.items())))
        return self._hash

    # -- transformations ----------------------------------------------------
    def map_coefficients(self, fn) -> "Laurent":
        return Laurent._raw(self.var, _strip({e: fn(c) for e, c in self.terms.items()}))

    def substitute_power(self, d: int, var: str | None = None) -> "Laurent":
        return substitute_power(self, d, var)

    def evaluate(self, point, var: str | None = None):
        return evaluate(self, point, var)

    def rename(self, var: str) -> "Laurent":
        """Same terms in a different outer variable."""
        return Laurent(var, self.terms)

    def shift(self, k: int) -> "Laurent":
        """Multiply by ``var**k``."""
        return Laurent._raw(self.var, {e + k: c for e, c in self.terms.items()})

    def has_nonnegative_coefficients(self) -> bool:
        for c in self.terms.values():
            if isinstance(c, Laurent):
                if not c.has_nonnegative_coefficients():
                    return False
            elif c < 0:
                return False
        return True

    def has_integer_coefficients(self) -> bool:
        for c in self.terms.values():
            if isinstance(c, Laurent):
                if not c.has_integer_coefficients():
                    return False
            elif Fraction(c).denominator != 1:
                return False
        return True

    def __repr__(self):
        return f"Laurent({self.var!r}, {render(self)!r})"

    def __str__(self):
        return render(self)


def _strip(d: dict) -> dict:
    out = {}
    for e, c in d.items():
        if isinstance(c, Laurent) and c.is_constant():
            c = c.constant_term()
        if c:
            out[e] = _clean_number(c) if isinstance(c, Fraction) else c
    return out


def _exact_div_coeff(a, b):
    if isinstance(b, Laurent):
        if isinstance(a, Laurent):
            return a.exact_divide(b)
        return Laurent.const(b.var, a).exact_divide(b)
    if isinstance(a, Laurent):
        return a / b
    return _clean_number(Fraction(a) / Fraction(b))


# ---------------------------------------------------------------------------
# named operations on Laurent polynomials
# ---------------------------------------------------------------------------


def _signature(f: Laurent):
    sig = [f.var]
    inner = {c.var for c in f.terms.values() if isinstance(c, Laurent)}
    if len(inner) > 1:
        raise RingMismatchError(f"mixed coefficient rings {sorted(inner)}")
    sig.append(next(iter(inner)) if inner else None)
    return tuple(sig)


def laurent_combine(kind: str, f: Laurent, g: Laurent) -> Laurent:
    """Add, subtract or multiply two polynomials of the same ring.

    Unlike the operators, no coercion happens here: both arguments must
    share the outer variable and coefficient ring.
    """
    if not isinstance(f, Laurent) or not isinstance(g, Laurent):
        raise RingMismatchError("laurent_combine expects two Laurent polynomials")
    if f.var != g.var:
        raise RingMismatchError(f"variables differ: {f.var!r} vs {g.var!r}")
    sf, sg = _signature(f), _signature(g)
    if sf[1] is not None and sg[1] is not None and sf[1] != sg[1]:
        raise RingMismatchError(f"coefficient rings differ: {sf[1]!r} vs {sg[1]!r}")
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    raise ValueError(f"unknown kind {kind!r}")


def substitute_power(f, d: int, var: str | None = None):
    """Replace ``var`` by ``var**d`` (``var`` defaults to the outer variable)."""
    if not isinstance(d, int) or d == 0:
        raise InvalidSubstitutionError(f"substitution exponent must be a nonzero integer, got {d!r}")
    if isinstance(f, RationalFunction):
        if var not in (None, f.var):
            return f
        return f.substitute_power(d)
    if isinstance(f, FormalFraction):
        return FormalFraction(substitute_power(f.num, d, var), substitute_power(f.den, d, var))
    if not isinstance(f, Laurent):
        return f
    target = f.var if var is None else var
    if f.var == target:
        return Laurent._raw(f.var, {e * d: c for e, c in f.terms.items()})
    if _rank(target) > _rank(f.var):
        return f
    return Laurent._raw(
        f.var,
        _strip({e: substitute_power(c, d, target) if isinstance(c, Laurent) else c for e, c in f.terms.items()}),
    )


def evaluate(f, point, var: str | None = None):
    """Evaluate ``var`` (default: outer variable) at ``point``.

    ``point`` may be a rational or a ring element; a dict ``{var: value}``
    evaluates several variables in turn.  Fully evaluated results are
    returned as plain rationals.
    """
    if isinstance(point, dict):
        out = f
        for name, value in point.items():
            out = evaluate(out, value, name)
        return out
    if isinstance(f, RationalFunction):
        if var not in (None, f.var):
            return f
        return f.evaluate(point)
    if isinstance(f, FormalFraction):
        num = evaluate(f.num, point, var)
        den = evaluate(f.den, point, var)
        if not den:
            raise EvaluationError(f"denominator {render(f.den)} vanishes at {var or 'outer variable'}={point}")
        if _is_number(num) and _is_number(den):
            return _clean_number(Fraction(num) / Fraction(den))
        return FormalFraction(num, den)
    if not isinstance(f, Laurent):
        return f
    target = f.var if var is None else var
    if f.var != target:
        if _rank(target) > _rank(f.var):
            return f
        total = 0
        for e, c in f.terms.items():
            total = total + Laurent._raw(f.var, {e: 1}) * (evaluate(c, point, target) if isinstance(c, Laurent) else c)
        return _collapse(total)
    if _is_number(point) and point == 0 and f.terms and min(f.terms) < 0:
        e = min(f.terms)
        raise EvaluationError(f"term {render(Laurent._raw(f.var, {e: 1}))} has a pole at {f.var}=0")
    total = 0
    for e, c in sorted(f.terms.items()):
        if e < 0:
            if _is_number(point):
                p = Fraction(1) / Fraction(point) ** (-e)
            else:
                p = point ** e
        else:
            p = point**e
        total = total + c * p
    return _collapse(total)


def _collapse(x):
    while isinstance(x, Laurent) and x.is_constant():
        x = x.constant_term()
    if isinstance(x, Fraction):
        return _clean_number(x)
    return x


# ---------------------------------------------------------------------------
# dense integer polynomials (lists, index = degree) used for normalization
# ---------------------------------------------------------------------------


def _dtrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _dmul(a, b):
    if not a or not b:
        return []
    if len(a) == 1:
        c = a[0]
        return [c * x for x in b]
    if len(b) == 1:
        c = b[0]
        return [c * x for x in a]
    if len(a) > 24 and len(b) > 24:
        return _kronecker_mul(a, b)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _kronecker_mul(a, b):
    bound = max(abs(x) for x in a) * max(abs(y) for y in b) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    A = _pack(a, bits)
    B = _pack(b, bits)
    return _unpack(A * B, bits, len(a) + len(b) - 1)


def _pack(a, bits):
    x = 0
    for c in reversed(a):
        x = (x << bits) + c
    return x


def _unpack(x, bits, n):
    out = []
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    for _ in range(n):
        c = x & mask
        if c >= half:
            c -= 1 << bits
        out.append(c)
        x = (x - c) >> bits
    return out


def _dadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return _dtrim(out)


def _dscale(a, c):
    return [c * x for x in a]


def _content(a):
    g = 0
    for x in a:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g


def _primitive(a):
    """Return (content with sign of lc, primitive part with positive lc)."""
    g = _content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return 1, a
    return g, [x // g for x in a]


def _dquo_exact(a, b):
    """Exact quotient over Z; returns None if b does not divide a."""
    if not b:
        raise ZeroDivisionError
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return None if any(a) else []
    rem = list(a)
    lc = b[-1]
    q = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = rem[i + db]
        if c:
            qi, r = divmod(c, lc)
            if r:
                return None
            q[i] = qi
            for j, y in enumerate(b):
                rem[i + j] -= qi * y
    if any(rem[:db]):
        return None
    return q


def _deval(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def _heu_gcd(f, g):
    """Heuristic GCD of primitive integer polynomials; None on failure."""
    fn = max(abs(c) for c in f)
    gn = max(abs(c) for c in g)
    B = 2 * min(fn, gn) + 29
    x = max(min(B, 99 * math.isqrt(B)), 2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 2)
    for _ in range(8):
        ff = _deval(f, x)
        gg = _deval(g, x)
        if ff and gg:
            h = math.gcd(ff, gg)
            H = []
            t = h
            half = x // 2
            while t:
                r = t % x
                if r > half:
                    r -= x
                H.append(r)
                t = (t - r) // x
            if H:
                _, H = _primitive(H)
                if _dquo_exact(f, H) is not None and _dquo_exact(g, H) is not None:
                    return H
        x = 73794 * x * math.isqrt(math.isqrt(x)) // 27011
    return None


def _prs_gcd(f, g):
    """Primitive remainder sequence gcd (fallback)."""
    a, b = f, g
    if len(a) < len(b):
        a, b = b, a
    while b and len(b) > 1:
        r = _pseudo_rem(a, b)
        if not r:
            break
        _, r = _primitive(r)
        a, b = b, r
    if b and len(b) == 1:
        return [1]
    _, a = _primitive(b if b else a)
    return a


def _pseudo_rem(a, b):
    rem = list(a)
    db = len(b) - 1
    lc = b[-1]
    while len(rem) - 1 >= db and rem:
        c = rem[-1]
        shift = len(rem) - 1 - db
        rem = [lc * x for x in rem]
        for j, y in enumerate(b):
            rem[j + shift] -= c * y
        _dtrim(rem)
    return rem


def _dgcd(f, g):
    """Monic-up-to-sign primitive gcd of two primitive integer polynomials."""
    if len(f) == 1 or len(g) == 1:
        return [1]
    if f == g:
        return f
    h = _heu_gcd(f, g)
    if h is None:
        h = _prs_gcd(f, g)
    return h


def _from_coeffs(coeffs):
    """Rational coefficient list -> (Fraction scale, primitive int list)."""
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) if isinstance(c, Fraction) else c * den for c in coeffs]
    g, p = _primitive(ints)
    return Fraction(g, den), p


# ---------------------------------------------------------------------------
# rational functions in one variable
# ---------------------------------------------------------------------------


class RationalFunction:
    """Element of Q(var) in canonical form ``c * var**s * N / D``.

    ``N`` and ``D`` are primitive integer polynomials with positive leading
    coefficient and nonzero constant term, and are coprime; ``c`` is a
    rational.  The canonical quotient exposed by :attr:`num` and
    :attr:`den` has ``den`` monic.
    """

    __slots__ = ("var", "c", "s", "N", "D", "_hash")

    def __init__(self, var: str, c, s: int, N, D):
        # trusted constructor; use the classmethods for normalization
        self.var = var
        self.c = c
        self.s = s
        self.N = N
        self.D = D
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_laurent(cls, f) -> "RationalFunction":
        if isinstance(f, RationalFunction):
            return f
        if not isinstance(f, Laurent):
            raise TypeError(f"expected a Laurent polynomial, got {f!r}")
        if not f.terms:
            return cls.zero(f.var)
        for c in f.terms.values():
            if isinstance(c, Laurent):
                raise RingMismatchError("rational functions need rational coefficients")
        lo = min(f.terms)
        hi = max(f.terms)
        coeffs = [f.terms.get(e, 0) for e in range(lo, hi + 1)]
        c, N = _from_coeffs(coeffs)
        return cls(f.var, c, lo, tuple(N), (1,))

    @classmethod
    def constant(cls, var: str, c) -> "RationalFunction":
        c = Fraction(c)
        if not c:
            return cls.zero(var)
        return cls(var, c, 0, (1,), (1,))

    @classmethod
    def zero(cls, var: str) -> "RationalFunction":
        return cls(var, Fraction(0), 0, (1,), (1,))

    @classmethod
    def gen(cls, var: str, exp: int = 1) -> "RationalFunction":
        return cls(var, Fraction(1), exp, (1,), (1,))

    @classmethod
    def from_parts(cls, var, c, s, N, D) -> "RationalFunction":
        """Normalize ``c * var**s * N / D`` for integer lists N, D."""
        N = _dtrim(list(N))
        D = _dtrim(list(D))
        if not D:
            raise EvaluationError("division by zero")
        c = Fraction(c)
        if not N or not c:
            return cls.zero(var)
        k = 0
        while N[k] == 0:
            k += 1
        if k:
            N = N[k:]
            s += k
        k = 0
        while D[k] == 0:
            k += 1
        if k:
            D = D[k:]
            s -= k
        gn, N = _primitive(N)
        gd, D = _primitive(D)
        c = c * gn / gd
        if len(N) > 1 and len(D) > 1:
            g = _dgcd(N, D)
            if len(g) > 1:
                N = _dquo_exact(N, g)
                D = _dquo_exact(D, g)
        return cls(var, c, s, tuple(N), tuple(D))

    # -- canonical view -----------------------------------------------------
    @property
    def num(self) -> Laurent:
        lc = self.D[-1]
        scale = self.c / lc
        return Laurent(self.var, {self.s + i: scale * x for i, x in enumerate(self.N) if x})

    @property
    def den(self) -> Laurent:
        lc = self.D[-1]
        return Laurent(self.var, {i: Fraction(x, lc) for i, x in enumerate(self.D) if x})

    numerator = num
    denominator = den

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def is_laurent(self) -> bool:
        return len(self.D) == 1

    def to_laurent(self) -> Laurent:
        if len(self.D) != 1:
            raise NotExactError(f"{self} is not a Laurent polynomial")
        return self.num

    def is_constant(self) -> bool:
        return self.s == 0 and len(self.N) == 1 and len(self.D) == 1

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.var != self.var:
                raise RingMismatchError(f"variables differ: {self.var!r} vs {other.var!r}")
            return other
        if isinstance(other, Laurent):
            if other.var != self.var and other.terms:
                if other.is_constant() and not isinstance(other.constant_term(), Laurent):
                    return RationalFunction.constant(self.var, other.constant_term())
                raise RingMismatchError(f"variables differ: {self.var!r} vs {other.var!r}")
            return RationalFunction.from_laurent(Laurent(self.var, other.terms))
        if _is_number(other):
            return RationalFunction.constant(self.var, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.c:
            return self
        if not self.c:
            return o
        s = min(self.s, o.s)
        N1 = [0] * (self.s - s) + list(self.N)
        N2 = [0] * (o.s - s) + list(o.N)
        p1, r1 = self.c.numerator, self.c.denominator
        p2, r2 = o.c.numerator, o.c.denominator
        if self.D == o.D:
            num = _dadd(_dscale(N1, p1 * r2), _dscale(N2, p2 * r1))
            return RationalFunction.from_parts(self.var, Fraction(1, r1 * r2), s, num, self.D)
        D1, D2 = list(self.D), list(o.D)
        if len(D1) == 1:
            num = _dadd(_dscale(_dmul(N1, D2), p1 * r2 * 1), _dscale(N2, p2 * r1 * D1[0]))
            return _finish_sum(self.var, r1 * r2 * D1[0], s, num, D2)
        if len(D2) == 1:
            num = _dadd(_dscale(N1, p1 * r2 * D2[0]), _dscale(_dmul(N2, D1), p2 * r1))
            return _finish_sum(self.var, r1 * r2 * D2[0], s, num, D1)
        g = _dgcd(D1, D2)
        if len(g) > 1:
            d1 = _dquo_exact(D1, g)
            d2 = _dquo_exact(D2, g)
        else:
            d1, d2 = D1, D2
        num = _dadd(_dscale(_dmul(N1, d2), p1 * r2), _dscale(_dmul(N2, d1), p2 * r1))
        den = _dmul(D1, d2)
        if len(g) > 1:
            return RationalFunction.from_parts(self.var, Fraction(1, r1 * r2), s, num, den)
        return _finish_sum(self.var, r1 * r2, s, num, den, coprime=True)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(self.var, -self.c, self.s, self.N, self.D)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.c or not o.c:
            return RationalFunction.zero(self.var)
        c = self.c * o.c
        s = self.s + o.s
        N1, D1, N2, D2 = self.N, self.D, o.N, o.D
        if len(D1) == 1 and len(D2) == 1:
            return RationalFunction(self.var, c, s, tuple(_dmul(list(N1), list(N2))), (1,))
        N1, D1, N2, D2 = list(N1), list(D1), list(N2), list(D2)
        if len(N1) > 1 and len(D2) > 1:
            g = _dgcd(N1, D2)
            if len(g) > 1:
                N1 = _dquo_exact(N1, g)
                D2 = _dquo_exact(D2, g)
        if len(N2) > 1 and len(D1) > 1:
            g = _dgcd(N2, D1)
            if len(g) > 1:
                N2 = _dquo_exact(N2, g)
                D1 = _dquo_exact(D1, g)
        return RationalFunction(self.var, c, s, tuple(_dmul(N1, N2)), tuple(_dmul(D1, D2)))

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.c:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.var, 1 / self.c, -self.s, self.D, self.N)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return RationalFunction.constant(self.var, 1)
        N = [1]
        D = [1]
        bN, bD = list(self.N), list(self.D)
        k = n
        while k:
            if k & 1:
                N = _dmul(N, bN)
                D = _dmul(D, bD)
            k >>= 1
            if k:
                bN = _dmul(bN, bN)
                bD = _dmul(bD, bD)
        return RationalFunction(self.var, self.c**n, self.s * n, tuple(N), tuple(D))

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except RingMismatchError:
            return False
        if o is None:
            return NotImplemented
        return (self.c, self.s, self.N, self.D) == (o.c, o.s, o.N, o.D) or (not self.c and not o.c)

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.c)
            else:
                self._hash = hash((self.var, self.c, self.s, self.N, self.D))
        return self._hash

    def cross_equal(self, other) -> bool:
        """Equality by cross-multiplication of the canonical quotients."""
        o = self._coerce(other)
        return self.num * o.den == o.num * self.den

    # -- transformations ----------------------------------------------------
    def substitute_power(self, d: int) -> "RationalFunction":
        if not isinstance(d, int) or d == 0:
            raise InvalidSubstitutionError(f"substitution exponent must be a nonzero integer, got {d!r}")
        if d == 1 or not self.c:
            return self
        N, D = list(self.N), list(self.D)
        if d > 0:
            return RationalFunction(self.var, self.c, self.s * d, tuple(_spread(N, d)), tuple(_spread(D, d)))
        k = -d
        rN = _spread(N[::-1], k)
        rD = _spread(D[::-1], k)
        s = self.s * d + d * (len(N) - 1) - d * (len(D) - 1)
        c = self.c
        if rN[-1] < 0:
            rN = [-x for x in rN]
            c = -c
        if rD[-1] < 0:
            rD = [-x for x in rD]
            c = -c
        return RationalFunction(self.var, c, s, tuple(rN), tuple(rD))

    def evaluate(self, point):
        point = Fraction(point)
        dv = _deval(self.D, point)
        if dv == 0:
            raise EvaluationError(
                f"denominator {render(self.den)} vanishes at {self.var}={point}"
            )
        if point == 0 and self.s < 0:
            raise EvaluationError(f"factor {self.var}^{self.s} has a pole at {self.var}=0")
        val = self.c * _deval(self.N, point) / dv
        if self.s:
            val *= point**self.s
        return _clean_number(Fraction(val))

    def rename(self, var: str) -> "RationalFunction":
        return RationalFunction(var, self.c, self.s, self.N, self.D)

    def __repr__(self):
        return f"RationalFunction({self.var!r}, {render(self)!r})"

    def __str__(self):
        return render(self)


def _spread(a, d):
    if d == 1:
        return list(a)
    out = [0] * ((len(a) - 1) * d + 1)
    for i, x in enumerate(a):
        out[i * d] = x
    return out


def _finish_sum(var, r, s, num, den, coprime=False):
    if not num:
        return RationalFunction.zero(var)
    num = list(num)
    k = 0
    while num[k] == 0:
        k += 1
    if k:
        num = num[k:]
        s += k
    gn, num = _primitive(num)
    gd, den = _primitive(list(den))
    c = Fraction(gn, r * gd)
    if not coprime and len(num) > 1 and len(den) > 1:
        g = _dgcd(num, den)
        if len(g) > 1:
            num = _dquo_exact(num, g)
            den = _dquo_exact(den, g)
    return RationalFunction(var, c, s, tuple(num), tuple(den))


def fraction_normalize(num, den) -> RationalFunction:
    """Canonical quotient ``num/den`` of two univariate Laurent polynomials."""
    if isinstance(den, Laurent) and not den.terms or (not isinstance(den, Laurent) and den == 0):
        raise EvaluationError("division by zero")
    if isinstance(num, Laurent) and isinstance(den, Laurent) and num.var != den.var and num.terms and den.terms:
        raise RingMismatchError(f"variables differ: {num.var!r} vs {den.var!r}")
    var = num.var if isinstance(num, Laurent) else den.var
    n = RationalFunction.from_laurent(num) if isinstance(num, Laurent) else RationalFunction.constant(var, num)
    d = RationalFunction.from_laurent(den) if isinstance(den, Laurent) else RationalFunction.constant(var, den)
    if n.var != d.var:
        n = n.rename(d.var) if not n.c else n
    return n / d


# ---------------------------------------------------------------------------
# fractions over nested rings (cross-multiplication equality only)
# ---------------------------------------------------------------------------


class FormalFraction:
    """Unreduced quotient of ring elements; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if (isinstance(den, Laurent) and not den.terms) or (_is_number(den) and den == 0):
            raise EvaluationError("division by zero")
        self.num = num
        self.den = den

    @staticmethod
    def _lift(x):
        return x if isinstance(x, FormalFraction) else FormalFraction(x, 1)

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return FormalFraction(self.num + o.num, self.den)
        return FormalFraction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return FormalFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        return FormalFraction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        return FormalFraction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other):
        if isinstance(other, (Laurent, int, Fraction, FormalFraction)):
            o = self._lift(other)
            return self.num * o.den == o.num * self.den
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def __repr__(self):
        return f"FormalFraction({render(self.num)!r}, {render(self.den)!r})"


# ---------------------------------------------------------------------------
# rendering and serialization
# ---------------------------------------------------------------------------


def _render_number(c) -> str:
    c = _clean_number(Fraction(c)) if not isinstance(c, int) else c
    return str(c)


def _power(var, e):
    if e == 1:
        return var
    return f"{var}^{e}"


def render(x) -> str:
    """Canonical text form: ascending exponents, ``q^-1``, explicit signs.

    Nested coefficients with several terms are parenthesized, e.g.
    ``(q^-1+3+q)+(2+q)z``.
    """
    if isinstance(x, RationalFunction):
        if x.is_laurent():
            return render(x.num)
        return f"({render(x.num)})/({render(x.den)})"
    if isinstance(x, FormalFraction):
        return f"({render(x.num)})/({render(x.den)})"
    if not isinstance(x, Laurent):
        return _render_number(x)
    if not x.terms:
        return "0"
    parts = []
    for e in sorted(x.terms):
        c = x.terms[e]
        if e == 0:
            body = render(c)
            if isinstance(c, Laurent) and len(c.terms) > 1:
                body = f"({body})"
        else:
            mono = _power(x.var, e)
            if isinstance(c, Laurent):
                if len(c.terms) > 1:
                    body = f"({render(c)}){mono}"
                else:
                    inner = render(c)
                    if inner == "1":
                        body = mono
                    elif inner == "-1":
                        body = "-" + mono
                    else:
                        body = f"{inner}*{mono}"
            else:
                if c == 1:
                    body = mono
                elif c == -1:
                    body = "-" + mono
                elif isinstance(c, Fraction) and c.denominator != 1:
                    body = f"({c}){mono}"
                else:
                    body = f"{c}{mono}"
        if parts and not body.startswith("-"):
            parts.append("+")
        parts.append(body)
    return "".join(parts)


def to_json(x):
    """JSON-ready form: ``{"var": "q", "terms": [[exp, "p/q"], ...]}``.

    Nested coefficients are themselves scalar objects; rational functions
    become ``{"num": ..., "den": ...}``.
    """
    if isinstance(x, RationalFunction):
        return {"num": to_json(x.num), "den": to_json(x.den)}
    if isinstance(x, FormalFraction):
        return {"num": to_json(x.num), "den": to_json(x.den)}
    if isinstance(x, Laurent):
        terms = []
        for e in sorted(x.terms):
            c = x.terms[e]
            terms.append([e, to_json(c) if isinstance(c, Laurent) else _fraction_literal(c)])
        return {"var": x.var, "terms": terms}
    return _fraction_literal(x)


def _fraction_literal(c) -> str:
    f = Fraction(c)
    return f"{f.numerator}/{f.denominator}"


def from_json(obj):
    if isinstance(obj, str):
        return _clean_number(Fraction(obj))
    if "num" in obj:
        num = from_json(obj["num"])
        den = from_json(obj["den"])
        if isinstance(num, Laurent) and isinstance(den, Laurent) and num.var == den.var and not (
            any(isinstance(c, Laurent) for c in num.terms.values())
        ):
            return fraction_normalize(num, den)
        return FormalFraction(num, den)
    return Laurent(obj["var"], {int(e): from_json(c) for e, c in obj["terms"]})
