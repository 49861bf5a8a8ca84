"""Linear functionals on polynomials, stored as finite moment prefixes.

A :class:`MomentFunctional` knows ``<u, x^n>`` for ``n <= N``.  Every check
below states how many moments it needs and is exact up to that horizon.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactscalars import RationalFunction, to_json
from .qpolyops import (
    XPolynomial,
    binomial,
    bracket,
    dilate,
    factorial,
    jackson,
    qpow,
    scalar,
)

__all__ = [
    "DegeneracyError",
    "MomentRangeError",
    "MomentFunctional",
    "pearson_moments",
    "functional_action",
    "functional_leibniz_check",
    "family_moments",
    "orthogonality_check",
    "norm",
    "derivative_normalizer",
    "rodrigues_constant",
    "rodrigues_constant_from_norm",
    "rodrigues_check",
    "even_order_functional_check",
    "dual_sequence_check",
    "derivative_functional_check",
    "norm_ratio",
    "norm_ratio_product",
]


class DegeneracyError(ArithmeticError):
    """The moment recurrence pivot vanishes at index ``n``."""

    def __init__(self, n: int):
        super().__init__(f"moment recurrence degenerates at n={n}")
        self.n = n


class MomentRangeError(IndexError):
    pass


@dataclass(frozen=True)
class MomentFunctional:
    moments: tuple
    d: int = 1
    provenance: str = "pearson-generated"

    @property
    def horizon(self) -> int:
        return len(self.moments) - 1

    def __getitem__(self, n: int) -> RationalFunction:
        if not 0 <= n < len(self.moments):
            raise MomentRangeError(f"moment {n} not available (horizon {self.horizon})")
        return self.moments[n]

    def __call__(self, f: XPolynomial) -> RationalFunction:
        """``<u, f>``."""
        if f.degree > self.horizon:
            raise MomentRangeError(f"degree {f.degree} exceeds horizon {self.horizon}")
        out = scalar(0)
        for i, c in enumerate(f.coeffs):
            if c:
                out = out + c * self.moments[i]
        return out

    def dq(self) -> "MomentFunctional":
        """``<D_q u, x^n> = -[n]_q <u, x^{n-1}>``."""
        ms = [scalar(0)] + [-bracket(n, self.d) * self.moments[n - 1] for n in range(1, len(self.moments))]
        return MomentFunctional(tuple(ms), self.d, "derived-by-action")

    def mul(self, g: XPolynomial) -> "MomentFunctional":
        """``<g u, x^n> = <u, g x^n>``; the horizon drops by ``deg g``."""
        top = self.horizon - max(g.degree, 0)
        if top < 0:
            raise MomentRangeError("multiplier degree exceeds horizon")
        ms = []
        for n in range(top + 1):
            s = scalar(0)
            for i, c in enumerate(g.coeffs):
                if c:
                    s = s + c * self.moments[n + i]
            ms.append(s)
        return MomentFunctional(tuple(ms), self.d, "derived-by-action")

    def scale(self, c) -> "MomentFunctional":
        c = scalar(c)
        return MomentFunctional(tuple(c * m for m in self.moments), self.d, "derived-by-action")

    def truncate(self, N: int) -> "MomentFunctional":
        if N > self.horizon:
            raise MomentRangeError(f"cannot extend horizon {self.horizon} to {N}")
        return MomentFunctional(self.moments[: N + 1], self.d, self.provenance)

    def agrees(self, other: "MomentFunctional", M: int) -> bool:
        return all(self[n] == other[n] for n in range(M + 1))

    def to_json(self):
        return {"base": f"q=v^{self.d}", "provenance": self.provenance, "moments": [to_json(m) for m in self.moments]}


def pearson_moments(phi: XPolynomial, psi: XPolynomial, N: int) -> MomentFunctional:
    """Moments of the normalized solution of ``D_q(Phi u) + Psi u = 0``."""
    if phi.degree > 2 or psi.degree != 1:
        raise ValueError("need deg Phi <= 2 and deg Psi = 1")
    d = phi.d
    p0, p1, p2 = phi.coeff(0), phi.coeff(1), phi.coeff(2)
    s0, s1 = psi.coeff(0), psi.coeff(1)
    m = [scalar(1)]
    for n in range(N):
        b = bracket(n, d)
        pivot = s1 - b * p2
        if not pivot:
            raise DegeneracyError(n)
        rhs = b * p1 * m[n] - s0 * m[n]
        if n >= 1:
            rhs = rhs + b * p0 * m[n - 1]
        m.append(rhs / pivot)
    return MomentFunctional(tuple(m), d)


def functional_action(kind: str, arg, u: MomentFunctional) -> MomentFunctional:
    if kind == "dq":
        return u.dq()
    if kind == "mul":
        if arg is None:
            raise ValueError("mul needs a polynomial argument")
        return u.mul(arg)
    raise ValueError(f"unknown action {kind!r}")


def functional_leibniz_check(u: MomentFunctional, f: XPolynomial, n: int, M: int) -> bool:
    """``D_q^n(f u) = sum_k [n,k]_{1/q} q^{-(n-k)} (D_{1/q}^{n-k} f)(x/q^k) D_q^k u`` on x^0..x^M."""
    lhs = u.mul(f)
    for _ in range(n):
        lhs = lhs.dq()
    derivs = [f]
    for _ in range(n):
        derivs.append(jackson(derivs[-1], -1))
    du = [u]
    for _ in range(n):
        du.append(du[-1].dq())
    d = u.d
    for m in range(M + 1):
        rhs = scalar(0)
        for k in range(n + 1):
            c = binomial(n, k, -d) * qpow(-(n - k), d)
            g = dilate(derivs[n - k], -k) * XPolynomial.monomial(m, d=d)
            rhs = rhs + du[k](g) * c
        if lhs[m] != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# family-level checks
# ---------------------------------------------------------------------------


def family_moments(family, N: int) -> MomentFunctional:
    cache = family._moments
    best = cache.get("u0")
    if best is None or best.horizon < N:
        best = pearson_moments(family.phi, family.psi, max(N, 2 * family.n_max + 2))
        cache["u0"] = best
    return best


def norm(family, n: int) -> RationalFunction:
    """``<u_0, P_n^2>``."""
    p = family.pn(n)
    return family_moments(family, 2 * n)(p * p)


def orthogonality_check(family, N: int):
    """``(ok, witness)``: zero off-diagonal pairings and norms equal to ``prod gamma_j``."""
    u = family_moments(family, 2 * N)
    polys = [family.pn(n) for n in range(N + 1)]
    expected = scalar(1)
    for n in range(N + 1):
        if n:
            expected = expected * family.gamma(n)
        for m in range(n):
            val = u(polys[n] * polys[m])
            if val:
                return False, f"<u0,P{n}P{m}> = {val}"
        val = u(polys[n] * polys[n])
        if val != expected:
            return False, f"<u0,P{n}^2> = {val}, expected {expected}"
    return True, None


def _phi_sigma(family, sigma: int) -> XPolynomial:
    return dilate(family.phi, sigma) * qpow(-sigma * family.deg, family.d)


def _phi_product(family, k: int) -> XPolynomial:
    out = XPolynomial.constant(1, family.d)
    for s in range(k):
        out = out * _phi_sigma(family, s)
    return out


def derivative_normalizer(family, k: int) -> RationalFunction:
    """Constant c with ``<c prod_{s<k} Phi_s u_0, 1> = 1``."""
    if k == 0:
        return scalar(1)
    prod = _phi_product(family, k)
    return 1 / family_moments(family, prod.degree)(prod)


def rodrigues_constant(family, n: int, literal: bool = False) -> RationalFunction:
    """Rodrigues constant ``[n]_q! / prod_{s=1}^n shifted_eigenvalue(s, n-s)``.

    ``literal=True`` adds the factor ``q^{-n(n-1)deg/2}``, which is already
    carried by the ``Phi_s`` product and breaks the formula for quadratic Phi.
    """
    from .qfamilies import shifted_eigenvalue

    d = family.d
    denom = scalar(1)
    for s in range(1, n + 1):
        denom = denom * shifted_eigenvalue(family, s, n - s)
    out = factorial(n, d) / denom
    if literal:
        out = out * qpow(Fraction(-n * (n - 1) * family.deg, 2), d)
    return out


def rodrigues_constant_from_norm(family, n: int) -> RationalFunction:
    sign = -1 if n % 2 else 1
    return norm(family, n) * derivative_normalizer(family, n) * sign / factorial(n, family.d)


def rodrigues_check(family, n: int, M: int) -> bool:
    u = family_moments(family, M + 2 * n + 2)
    lhs = u.mul(family.pn(n))
    rhs = u.mul(_phi_product(family, n))
    for _ in range(n):
        rhs = rhs.dq()
    rhs = rhs.scale(rodrigues_constant(family, n))
    return lhs.agrees(rhs, M)


def even_order_functional_check(family, n: int, k: int, M: int) -> bool:
    from .qfamilies import even_order_eigenvalue

    u = family_moments(family, M + 2 * k + n + 2)
    f = family.pn(n)
    for _ in range(k):
        f = jackson(f)
    lhs = u.mul(_phi_product(family, k) * f)
    for _ in range(k):
        lhs = lhs.dq()
    rhs = u.mul(family.pn(n)).scale(even_order_eigenvalue(family, n, k))
    return lhs.agrees(rhs, M)


def dual_sequence_check(family, N: int) -> bool:
    u = family_moments(family, 2 * N)
    for n in range(N + 1):
        un = u.mul(family.pn(n)).scale(1 / norm(family, n))
        for k in range(N + 1):
            if un(family.pn(k)) != (1 if n == k else 0):
                return False
    return True


def derivative_functional_check(family, k: int, M: int) -> bool:
    """Normalized ``prod Phi_s u_0`` against the Pearson solution for ``(Phi_k, Psi_k)``."""
    from .qfamilies import phi_psi_k

    phi_k, psi_k, z = phi_psi_k(family, k)
    u = family_moments(family, M + 2 * k)
    lhs = u.mul(_phi_product(family, k)).scale(z)
    return lhs.agrees(pearson_moments(phi_k, psi_k, M), M)


def _shifted_norm(family, k: int, n: int) -> RationalFunction:
    from .qfamilies import phi_psi_k, pn_deriv

    phi_k, psi_k, _ = phi_psi_k(family, k)
    p = pn_deriv(family, n, k)
    return pearson_moments(phi_k, psi_k, 2 * n)(p * p)


def norm_ratio(family, n: int, k: int, nu: int) -> RationalFunction:
    """Ratio of norms of the derivative sequences of orders k and k-nu."""
    d = family.d
    rising = scalar(1)
    for j in range(n + 1, n + nu + 1):
        rising = rising * bracket(j, d)
    sign = -1 if nu % 2 else 1
    return rising * sign * _shifted_norm(family, k, n) / _shifted_norm(family, k - nu, n + nu)


def norm_ratio_product(family, n: int, k: int, nu: int) -> RationalFunction:
    from .qfamilies import phi_psi_k

    d = family.d
    out = derivative_normalizer(family, k) / derivative_normalizer(family, k - nu)
    for s in range(1, nu + 1):
        phi_s, psi_s, _ = phi_psi_k(family, k - s)
        out = out * qpow(-(n + s - 1), d) * (bracket(n + s - 1, d) * phi_s.coeff(2) - psi_s.coeff(1))
    return out
