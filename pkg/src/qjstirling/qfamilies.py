"""q-classical family descriptors: the pair (Phi, Psi), recurrence data and derived scalars.

Parameters are elements of Q(v) with ``q = v**d``.  Preset families:

* ``al_salam_carlitz(a)`` and ``discrete_q_hermite`` (a = -1)
* ``stieltjes_wigert`` (d = 2, so ``q^(-3/2) = v^-3``)
* ``little_q_jacobi(a, b)``

``generic(phi, psi, beta, gamma)`` accepts anything else.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from .exactscalars import RationalFunction, render
from .qpolyops import (
    XPolynomial,
    bracket,
    bracket_inv,
    build_Lq,
    dilate,
    binomial,
    jackson,
    qpow,
    scalar,
)

__all__ = [
    "N_MAX",
    "RegularityError",
    "QClassicalFamily",
    "EigenScalars",
    "make_family",
    "al_salam_carlitz",
    "discrete_q_hermite",
    "stieltjes_wigert",
    "little_q_jacobi",
    "generic",
    "parse_family",
    "pn",
    "pn_deriv",
    "psi_slope",
    "eigenvalue",
    "shifted_eigenvalue",
    "shifted_eigenvalue_closed",
    "shifted_eigenvalue_difference",
    "even_order_eigenvalue",
    "even_order_eigenvalue_closed",
    "z_parameter",
    "eigen_scalars",
    "phi_psi_k",
    "explicit_pn",
    "eigenvalue_expansion_check",
]

N_MAX = 12


class RegularityError(ValueError):
    """The parameters make the recurrence or the Pearson data degenerate."""


@dataclass(eq=False)
class QClassicalFamily:
    name: str
    d: int
    params: dict
    phi: XPolynomial
    psi: XPolynomial
    beta: Callable[[int], RationalFunction]
    gamma: Callable[[int], RationalFunction]
    n_max: int = N_MAX
    _polys: list = field(default_factory=list, repr=False)
    _moments: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self):
        if not self.phi.is_monic() or self.phi.degree > 2:
            raise RegularityError(f"{self.name}: Phi must be monic of degree <= 2")
        if self.psi.degree != 1:
            raise RegularityError(f"{self.name}: Psi must have degree 1")
        if self.phi.d != self.d or self.psi.d != self.d:
            raise RegularityError(f"{self.name}: Phi and Psi must use q = v^{self.d}")
        for n in range(self.n_max):
            if not self.gamma(n + 1):
                raise RegularityError(f"{self.name}: gamma_{n + 1} vanishes")

    @property
    def deg(self) -> int:
        return self.phi.degree

    def pn(self, n: int) -> XPolynomial:
        return pn(self, n)

    def Lq(self):
        return build_Lq(self.phi, self.psi)

    def x(self) -> XPolynomial:
        return XPolynomial.monomial(1, d=self.d)

    def label(self) -> str:
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={render(v)}" for k, v in sorted(self.params.items()))
        return f"{self.name}({inner})"

    def __repr__(self):
        return f"QClassicalFamily({self.label()})"


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------


def _poly(coeffs, d):
    return XPolynomial(tuple(coeffs), d)


def al_salam_carlitz(a=-1, n_max: int = N_MAX) -> QClassicalFamily:
    a = scalar(a)
    if not a:
        raise RegularityError("al_salam_carlitz: a != 0 violated")
    q = qpow(1)
    psi = _poly([-(1 + a) / (a * (q - 1)), 1 / (a * (q - 1))], 1)
    return QClassicalFamily(
        name="al_salam_carlitz",
        d=1,
        params={"a": a},
        phi=_poly([1], 1),
        psi=psi,
        beta=lambda n: (1 + a) * qpow(n),
        gamma=lambda n: a * qpow(n - 1) * (qpow(n) - 1),
        n_max=n_max,
    )


def discrete_q_hermite(n_max: int = N_MAX) -> QClassicalFamily:
    fam = al_salam_carlitz(-1, n_max)
    fam.name = "discrete_q_hermite"
    fam.params = {}
    return fam


def stieltjes_wigert(n_max: int = N_MAX) -> QClassicalFamily:
    d = 2
    q = qpow(1, d)
    psi = _poly([qpow(Fraction(-3, 2), d) / (q - 1), -1 / (q - 1)], d)
    return QClassicalFamily(
        name="stieltjes_wigert",
        d=d,
        params={},
        phi=_poly([0, 0, 1], d),
        psi=psi,
        beta=lambda n: (1 + q - qpow(n + 1, d)) * qpow(Fraction(-4 * n - 3, 2), d),
        gamma=lambda n: (1 - qpow(n, d)) * qpow(-4 * n, d),
        n_max=n_max,
    )


def little_q_jacobi(a, b, n_max: int = N_MAX) -> QClassicalFamily:
    a, b = scalar(a), scalar(b)
    if not a or not b:
        raise RegularityError("little_q_jacobi: a, b != 0 violated")
    for n in range(n_max + 1):
        bad = qpow(-(n + 2))
        for label, val in (("a", a), ("b", b), ("ab", a * b)):
            if val == bad:
                raise RegularityError(f"little_q_jacobi: {label} != q^-{n + 2} violated")
    for m in range(2 * n_max + 3):
        if a * b * qpow(m) == 1:
            raise RegularityError(f"little_q_jacobi: ab q^{m} != 1 violated")
    q = qpow(1)
    ab = a * b

    def A(n):
        return qpow(n) * (1 - a * qpow(n + 1)) * (1 - ab * qpow(n + 1)) / (
            (1 - ab * qpow(2 * n + 1)) * (1 - ab * qpow(2 * n + 2))
        )

    def C(n):
        return a * qpow(n) * (1 - qpow(n)) * (1 - b * qpow(n)) / (
            (1 - ab * qpow(2 * n)) * (1 - ab * qpow(2 * n + 1))
        )

    scale = 1 / (ab * q * q * (q - 1))
    psi = _poly([(a * q - 1) * scale, (1 - ab * q * q) * scale], 1)
    phi = _poly([0, -1 / (b * q), 1], 1)
    return QClassicalFamily(
        name="little_q_jacobi",
        d=1,
        params={"a": a, "b": b},
        phi=phi,
        psi=psi,
        beta=lambda n: A(n) + C(n),
        gamma=lambda n: A(n - 1) * C(n),
        n_max=n_max,
    )


def generic(phi: XPolynomial, psi: XPolynomial, beta, gamma, name: str = "generic", n_max: int = N_MAX):
    return QClassicalFamily(name=name, d=phi.d, params={}, phi=phi, psi=psi, beta=beta, gamma=gamma, n_max=n_max)


_PRESETS = {
    "al_salam_carlitz": al_salam_carlitz,
    "asc": al_salam_carlitz,
    "discrete_q_hermite": discrete_q_hermite,
    "dqh": discrete_q_hermite,
    "stieltjes_wigert": stieltjes_wigert,
    "sw": stieltjes_wigert,
    "little_q_jacobi": little_q_jacobi,
    "lqj": little_q_jacobi,
}


def make_family(preset: str, **params) -> QClassicalFamily:
    try:
        ctor = _PRESETS[preset]
    except KeyError:
        raise ValueError(f"unknown family {preset!r}; choose from {sorted(set(_PRESETS))}") from None
    return ctor(**params)


def _parse_scalar(text: str) -> RationalFunction:
    """``'2'``, ``'-1/2'``, ``'q'``, ``'q^2'``, ``'q^-1'`` (q means v here)."""
    t = text.strip()
    if t.startswith("q") or t.startswith("v"):
        e = 1 if len(t) == 1 else int(t[1:].lstrip("^"))
        return RationalFunction.gen("v", e)
    return scalar(Fraction(t))


def parse_family(spec: str) -> QClassicalFamily:
    """``'asc:a=-1'``, ``'sw'``, ``'lqj:a=q,b=q^2'``."""
    name, _, rest = spec.partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, val = item.partition("=")
        if not eq:
            raise ValueError(f"bad family parameter {item!r}")
        params[key.strip()] = _parse_scalar(val)
    return make_family(name.strip().lower(), **params)


# ---------------------------------------------------------------------------
# sequences
# ---------------------------------------------------------------------------


def pn(family: QClassicalFamily, n: int) -> XPolynomial:
    """Monic orthogonal polynomial of degree n from the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    polys = family._polys
    if n < len(polys):
        return polys[n]
    with family._lock:
        x = family.x()
        if not polys:
            polys.append(XPolynomial.constant(1, family.d))
        if len(polys) == 1:
            polys.append(x - family.beta(0))
        while len(polys) <= n:
            m = len(polys) - 1
            polys.append((x - family.beta(m)) * polys[m] - polys[m - 1] * family.gamma(m))
    return polys[n]


def pn_deriv(family: QClassicalFamily, n: int, k: int) -> XPolynomial:
    """``D_q^k P_{n+k}`` normalized to be monic."""
    f = pn(family, n + k)
    for _ in range(k):
        f = jackson(f)
    norm = 1
    for j in range(n + 1, n + k + 1):
        norm = bracket(j, family.d) * norm
    return f * (1 / scalar(norm))


def explicit_pn(family: QClassicalFamily, n: int, variant: str = "literal") -> XPolynomial:
    """Closed-form hypergeometric sums for the presets.

    For Stieltjes-Wigert, ``variant='corrected'`` restores the
    ``(q;q)_n/(q;q)_k`` factor that makes the sum monic-orthogonal.
    """
    d = family.d
    x = family.x()
    out = XPolynomial.zero(d)
    if family.name in ("al_salam_carlitz", "discrete_q_hermite"):
        a = family.params.get("a", scalar(-1))
        for k in range(n + 1):
            # (1/x;q)_k x^k = prod_{i<k} (x - q^i)
            falling = XPolynomial.from_roots([qpow(i, d) for i in range(k)], d)
            out = out + falling * (binomial(n, k, d) * (-a) ** (n - k) * qpow(comb(n - k, 2), d))
        return out
    if family.name == "stieltjes_wigert":
        for k in range(n + 1):
            c = qpow(Fraction(k * (2 * k + 1) - n * (2 * n + 1), 2), d) / _q_poch_q(n - k, d)
            if (n + k) % 2:
                c = -c
            if variant == "corrected":
                c = c * _q_poch_q(n, d) / _q_poch_q(k, d)
            out = out + XPolynomial.monomial(k, c, d)
        return out
    if family.name == "little_q_jacobi":
        a, b = family.params["a"], family.params["b"]
        ab_n = a * b * qpow(n + 1, d)

        def poch(base, m):
            r = scalar(1)
            for i in range(m):
                r = r * (1 - base * qpow(i, d))
            return r

        lead = poch(a * qpow(1, d), n) / poch(ab_n, n)
        for k in range(n + 1):
            c = binomial(n, k, d) * poch(ab_n, k) / poch(a * qpow(1, d), k) * qpow(comb(n - k, 2), d)
            if (n - k) % 2:
                c = -c
            out = out + XPolynomial.monomial(k, c * lead, d)
        return out
    raise ValueError(f"no explicit sum for {family.name}")


def _q_poch_q(m: int, d: int) -> RationalFunction:
    """``(q;q)_m``."""
    out = scalar(1)
    for i in range(1, m + 1):
        out = out * (1 - qpow(i, d))
    return out


# ---------------------------------------------------------------------------
# eigenvalues
# ---------------------------------------------------------------------------


def psi_slope(family: QClassicalFamily) -> RationalFunction:
    """``Psi'(0)``."""
    return family.psi.coeff(1)


def _half_phi2(phi: XPolynomial) -> RationalFunction:
    """``Phi''(0)/2``, the x^2 coefficient."""
    return phi.coeff(2)


def z_parameter(family: QClassicalFamily) -> RationalFunction:
    """``-(1 + q Psi'(0))``; for monic quadratic Phi this is the same as ``-(Phi''(0)/2 + q Psi'(0))``."""
    return -(1 + qpow(1, family.d) * psi_slope(family))


def eigenvalue(family: QClassicalFamily, n: int) -> RationalFunction:
    d = family.d
    if family.deg < 2:
        return -bracket_inv(n, d) * psi_slope(family)
    return bracket_inv(n, d) * (bracket(n - 1, d) - psi_slope(family))


def phi_psi_k(family: QClassicalFamily, k: int):
    """``(Phi_k, Psi_k, normalizer)`` for the k-th derivative sequence."""
    d = family.d
    if k == 0:
        return family.phi, family.psi, scalar(1)
    s = qpow(-k * family.deg, d)
    phi_k = dilate(family.phi, k) * s
    psi_k = (family.psi - jackson(family.phi, k) * bracket(k, d)) * s
    from .qfunctionals import derivative_normalizer  # cyclic at import time

    return phi_k, psi_k, derivative_normalizer(family, k)


def _shifted_pair(family: QClassicalFamily, k: int):
    d = family.d
    s = qpow(-k * family.deg, d)
    return dilate(family.phi, k) * s, (family.psi - jackson(family.phi, k) * bracket(k, d)) * s


def shifted_eigenvalue(family: QClassicalFamily, n: int, k: int) -> RationalFunction:
    """Eigenvalue of degree n for the k-th derivative sequence, from ``(Phi_k, Psi_k)``."""
    d = family.d
    phi_k, psi_k = _shifted_pair(family, k)
    return bracket_inv(n, d) * (bracket(n - 1, d) * _half_phi2(phi_k) - psi_k.coeff(1))


def shifted_eigenvalue_closed(family: QClassicalFamily, n: int, k: int) -> RationalFunction:
    """The same eigenvalue from the closed form ``q^{-k deg - 1}[n]_{1/q}([n+2k]_q Phi''(0)/2 + z)``."""
    d = family.d
    h = _half_phi2(family.phi)
    z = -(h + qpow(1, d) * psi_slope(family))
    return qpow(-k * family.deg - 1, d) * bracket_inv(n, d) * (bracket(n + 2 * k, d) * h + z)


def shifted_eigenvalue_difference(family: QClassicalFamily, n: int, k: int, exponent: int | None = None) -> RationalFunction:
    """Closed form of ``shifted_eigenvalue(n-k, k)`` for quadratic Phi.

    ``q^e([n]_{1/q}(z+[n]_q) - [k]_{1/q}(z+[k]_q))`` with ``e = -k-1`` by
    default; pass ``exponent`` to try other prefactors.
    """
    if family.deg != 2:
        raise ValueError("closed form needs deg Phi = 2")
    d = family.d
    e = -k - 1 if exponent is None else exponent
    z = z_parameter(family)
    return qpow(e, d) * (bracket_inv(n, d) * (z + bracket(n, d)) - bracket_inv(k, d) * (z + bracket(k, d)))


def even_order_eigenvalue(family: QClassicalFamily, n: int, k: int) -> RationalFunction:
    """Product of ``shifted_eigenvalue(n-s, s)`` over ``s < k``."""
    out = scalar(1)
    for s in range(k):
        out = out * shifted_eigenvalue(family, n - s, s)
    return out


def even_order_eigenvalue_closed(family: QClassicalFamily, n: int, k: int) -> RationalFunction:
    d = family.d
    out = scalar(1)
    if family.deg < 2:
        for s in range(k):
            out = out * (bracket_inv(n, d) - bracket_inv(s, d))
        pre = qpow(Fraction(k * (k - 1) * (1 - family.deg), 2), d) * (-psi_slope(family)) ** k
        return pre * out
    z = z_parameter(family)
    for s in range(k):
        out = out * (bracket_inv(n, d) * (z + bracket(n, d)) - bracket_inv(s, d) * (z + bracket(s, d)))
    return qpow(Fraction(-k * (k + 1), 2), d) * out


@dataclass(frozen=True)
class EigenScalars:
    eigenvalue: RationalFunction
    shifted_eigenvalue: RationalFunction
    even_order_eigenvalue: RationalFunction
    z: RationalFunction
    shifted_eigenvalue_closed: RationalFunction
    even_order_eigenvalue_closed: RationalFunction

    @property
    def consistent(self) -> bool:
        return self.shifted_eigenvalue == self.shifted_eigenvalue_closed and self.even_order_eigenvalue == self.even_order_eigenvalue_closed


def eigen_scalars(family: QClassicalFamily, n: int, k: int) -> EigenScalars:
    if family.deg == 2 and _half_phi2(family.phi) != 1:
        raise RegularityError("quadratic Phi must be monic")
    return EigenScalars(
        eigenvalue=eigenvalue(family, n),
        shifted_eigenvalue=shifted_eigenvalue(family, n, k),
        even_order_eigenvalue=even_order_eigenvalue(family, n, k),
        z=z_parameter(family),
        shifted_eigenvalue_closed=shifted_eigenvalue_closed(family, n, k),
        even_order_eigenvalue_closed=even_order_eigenvalue_closed(family, n, k),
    )


def eigenvalue_expansion_check(family: QClassicalFamily, n: int, k: int) -> bool:
    """``eigenvalue(n)**k`` expanded in the even-order eigenvalues, with q-Stirling or q-Jacobi-Stirling weights."""
    from .qpolyops import specialize
    from .qstirling import qjs, qstirling

    d = family.d
    slope = psi_slope(family)
    total = scalar(0)
    for j in range(k + 1):
        if family.deg < 2:
            c = specialize(qstirling("second", k, j), d, invert=True)
            c = c * qpow(Fraction((family.deg - 1) * j * (j - 1), 2), d) * (-slope) ** (k - j)
        else:
            c = specialize(qjs("second", k, j), d, z=z_parameter(family), invert=True)
            c = c * qpow(Fraction(j * (j + 1), 2) - k, d)
        total = total + c * even_order_eigenvalue(family, n, j)
    return total == eigenvalue(family, n) ** k
