"""Verification suites shared by the command line and the acceptance tests.

A suite is a list of :class:`Check` thunks; running one produces a
:class:`Cell` that records parameters, the verdict and, on failure, a witness
string naming the first identity that broke.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import combinat, qfamilies, qfunctionals, qpolyops, qstirling
from .exactscalars import FormalFraction, Laurent, RationalFunction, render

__all__ = [
    "Cell",
    "Check",
    "VerdictReport",
    "SUITES",
    "DEFAULT_FAMILIES",
    "build_suite",
    "run_checks",
    "inverse_pair_matrices",
]

DEFAULT_FAMILIES = ("asc:a=-1", "asc:a=2", "sw", "lqj:a=q,b=q^2", "lqj:a=1/2,b=1/3")


@dataclass
class Cell:
    name: str
    params: dict
    ok: bool
    witness: str | None = None
    seconds: float = 0.0


@dataclass
class Check:
    name: str
    params: dict
    fn: Callable[[], tuple[bool, str | None]]

    def run(self) -> Cell:
        t0 = time.perf_counter()
        try:
            ok, witness = self.fn()
        except Exception as exc:  # a crash is a failed cell, not a failed run
            ok, witness = False, f"{type(exc).__name__}: {exc}"
        if not ok and not witness:
            witness = f"{self.name} failed at {self.params}"
        return Cell(self.name, self.params, bool(ok), None if ok else witness, round(time.perf_counter() - t0, 4))


@dataclass
class VerdictReport:
    suite: str
    cells: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> int:
        return sum(c.ok for c in self.cells)

    @property
    def failed(self) -> int:
        return len(self.cells) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self, timings: bool = False) -> dict:
        cells = []
        for c in self.cells:
            d = asdict(c)
            if not timings:
                d.pop("seconds")
            cells.append(d)
        out = {"suite": self.suite, "cells": cells, "totals": {"pass": self.passed, "fail": self.failed}}
        if timings:
            out["seconds"] = self.seconds
        return out


def run_checks(suite: str, checks: list, jobs: int = 1) -> VerdictReport:
    t0 = time.perf_counter()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            cells = list(pool.map(Check.run, checks))
    else:
        cells = [c.run() for c in checks]
    return VerdictReport(suite, cells, round(time.perf_counter() - t0, 3))


def _natural_laurent(c) -> bool:
    """Membership in N[q, 1/q]."""
    if isinstance(c, Laurent):
        return c.has_nonnegative_coefficients() and c.has_integer_coefficients()
    return c == int(c) and c >= 0


# ---------------------------------------------------------------------------
# number triangles
# ---------------------------------------------------------------------------

# (first-kind triangle, second-kind triangle, first kind stored unsigned?)
_PAIRS = {
    "qstirling": ("qstirling_first", "qstirling_second", True),
    "qjs": ("qjs_first", "qjs_second", True),
    "symmetric": ("sym_first", "sym_second", False),
    "wilson": ("wilson_first", "wilson_second", False),
    "askey_wilson": ("askeywilson_first", "askeywilson_second", False),
    "central": ("central_V", "central_U", True),
}


def inverse_pair_matrices(pair: str, n: int):
    first, second, unsigned = _PAIRS[pair]
    t1, t2 = qstirling.triangle(first), qstirling.triangle(second)

    def entry(t, i, j, sign):
        if j > i:
            return 0
        v = t(i, j)
        return -v if sign and (i - j) % 2 else v

    A = [[entry(t1, i, j, unsigned) for j in range(n + 1)] for i in range(n + 1)]
    B = [[entry(t2, i, j, False) for j in range(n + 1)] for i in range(n + 1)]
    return A, B


def _inverse(pair, n):
    A, B = inverse_pair_matrices(pair, n)
    return qstirling.inverse_check(A, B), f"{pair} matrices up to n={n} are not mutually inverse"


def _thm21(n):
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            for kind, lead in (("second", qstirling.qstirling("second", m, k)), ("first", qstirling.qstirling("first", m, k))):
                f = qstirling.qjs(kind, m, k)
                cs = qstirling.z_coefficients(f)
                if len(cs) - 1 != m - k:
                    return False, f"{kind} ({m},{k}): z-degree {len(cs) - 1} != {m - k}"
                if cs[-1] != lead:
                    return False, f"{kind} ({m},{k}): leading {render(cs[-1])} != {render(lead)}"
                for c in cs:
                    if not _natural_laurent(c):
                        return False, f"{kind} ({m},{k}): coefficient {render(c)} not in N[q,1/q]"
    return True, None


def _newton(n):
    for m in range(n + 1):
        for j in range(m + 1):
            lhs = qstirling.qjs_newton(m, j)
            if not lhs == FormalFraction(qstirling.qjs("second", m, j)):
                return False, f"Newton sum ({m},{j}) differs from recurrence value {render(qstirling.qjs('second', m, j))}"
    return True, None


def _specializations(n):
    for m in range(n + 1):
        for k in range(m + 1):
            for kind in ("first", "second"):
                if not qstirling.specialization_check(kind, m, k):
                    return False, f"z=1/(q-1) specialization fails for {kind} ({m},{k})"
            if not qstirling.y_version_check(m, k):
                return False, f"y-version rescaling fails at ({m},{k})"
    return True, None


def _ogf(family, K, N):
    tri = {"qjs_second": lambda m, k: qstirling.qjs("second", m, k), "sym_second": lambda m, k: qstirling.sym_stirling("second", m, k)}[family]
    for k in range(1, K + 1):
        col = qstirling.ogf_column(family, k, N)
        for m, c in col.items():
            if c != tri(m, k):
                return False, f"{family} column {k}, x^{m}: {render(c)} != {render(tri(m, k))}"
    return True, None


def _classical_limits(n):
    S = [[1]]
    c = [[1]]
    for m in range(1, n + 1):
        S.append([0] * (m + 1))
        c.append([0] * (m + 1))
        for k in range(1, m + 1):
            S[m][k] = (S[m - 1][k - 1] if k - 1 <= m - 1 else 0) + k * (S[m - 1][k] if k <= m - 1 else 0)
            c[m][k] = (c[m - 1][k - 1] if k - 1 <= m - 1 else 0) + (m - 1) * (c[m - 1][k] if k <= m - 1 else 0)
    for m in range(n + 1):
        for k in range(m + 1):
            if qstirling.classical_limit(qstirling.qstirling("second", m, k)) != S[m][k]:
                return False, f"S_q({m},{k}) at q=1 != Stirling {S[m][k]}"
            if qstirling.classical_limit(qstirling.qstirling("first", m, k)) != c[m][k]:
                return False, f"c_q({m},{k}) at q=1 != Stirling {c[m][k]}"
            for kind in ("first", "second"):
                lim = qstirling.classical_limit(qstirling.qjs(kind, m, k))
                if lim != qstirling.classical_js(kind, m, k):
                    return False, f"{kind} q-Jacobi-Stirling ({m},{k}) at q=1 differs from Jacobi-Stirling"
    return True, None


def _wilson_explicit(n):
    for m in range(n + 1):
        for k in range(m + 1):
            for kind in ("first", "second"):
                rhs = RationalFunction.from_laurent(qstirling.wilson(kind, m, k))
                if qstirling.wilson_explicit(kind, m, k) != rhs:
                    return False, f"Wilson {kind}-kind closed form ({m},{k})"
    return True, None


def _aw_explicit(n):
    for m in range(n + 1):
        for k in range(m + 1):
            want = FormalFraction(qstirling.askey_wilson("second", m, k))
            if not qstirling.askey_wilson_newton(m, k) == want:
                return False, f"Askey-Wilson Newton sum ({m},{k})"
            if not qstirling.askey_wilson_explicit(m, k) == want:
                return False, f"Askey-Wilson explicit sum ({m},{k})"
    return True, None


def stirling_checks(n: int = 7, **_) -> list[Check]:
    checks = []
    for pair in ("qstirling", "qjs", "central", "symmetric", "wilson", "askey_wilson"):
        m = min(n, 5) if pair == "askey_wilson" else n
        checks.append(Check("inverse_relations", {"pair": pair, "n": m}, lambda p=pair, m=m: _inverse(p, m)))
    checks.append(Check("z_degree_and_leading_coefficients", {"n": n}, lambda: _thm21(n)))
    checks.append(Check("newton_formula", {"n": min(n, 6)}, lambda: _newton(min(n, 6))))
    checks.append(Check("specializations_and_y_version", {"n": min(n, 6)}, lambda: _specializations(min(n, 6))))
    for fam in ("qjs_second", "sym_second"):
        checks.append(Check("ogf_columns", {"family": fam, "k": 4, "N": 8}, lambda f=fam: _ogf(f, 4, 8 if f == "qjs_second" else 7)))
    checks.append(Check("q_to_1_limits", {"n": min(n, 6)}, lambda: _classical_limits(min(n, 6))))
    checks.append(Check("wilson_explicit_sum", {"n": min(n, 6)}, lambda: _wilson_explicit(min(n, 6))))
    checks.append(Check("askey_wilson_explicit_sums", {"n": min(n, 4)}, lambda: _aw_explicit(min(n, 4))))
    return checks


# ---------------------------------------------------------------------------
# combinatorics
# ---------------------------------------------------------------------------


def _thm22(n):
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            cs = qstirling.z_coefficients(qstirling.qjs("second", m, k))
            for i, want in enumerate(cs):
                got = combinat.js_partition_polynomial(m, k, i)
                if got != want:
                    return False, f"partitions ({m},{k},{i}): {render(got)} != {render(want)}"
    return True, None


def _thm23(n):
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            cs = qstirling.z_coefficients(qstirling.qjs("first", m, k))
            for i, want in enumerate(cs):
                got = combinat.perm_pair_polynomial(m, k, i)
                if got != want:
                    return False, f"permutation pairs ({m},{k},{i}): {render(got)} != {render(want)}"
    return True, None


def _thm24(n):
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            got = combinat.double_signed_polynomial(m, k)
            want = qstirling.sym_stirling("second", m, k)
            if got != want:
                return False, f"double signed ({m},{k}): {render(got)} != {render(want)}"
    return True, None


def _thm25(n):
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            got = combinat.pairs_zero_polynomial(m, k)
            want = qstirling.sym_stirling("first", m, k)
            if (m - k) % 2:
                want = -want
            if got != want:
                return False, f"pairs on [n]_0 ({m},{k}): {render(got)} != {render(want)}"
    return True, None


def combinatorics_checks(n: int = 5, **_) -> list[Check]:
    return [
        Check("js_partitions_vs_second_kind", {"n": min(n, 6)}, lambda: _thm22(min(n, 6))),
        Check("permutation_pairs_vs_first_kind", {"n": min(n, 5)}, lambda: _thm23(min(n, 5))),
        Check("double_signed_partitions", {"n": min(n, 5)}, lambda: _thm24(min(n, 5))),
        Check("permutation_pairs_on_zero", {"n": min(n, 5)}, lambda: _thm25(min(n, 5))),
    ]


# ---------------------------------------------------------------------------
# operators and functionals
# ---------------------------------------------------------------------------


def _random_poly(rng: random.Random, deg: int, d: int):
    cs = []
    for _ in range(deg + 1):
        terms = {rng.randint(-2, 2) * d: rng.randint(-3, 3) for _ in range(2)}
        cs.append(Laurent("v", terms))
    return qpolyops.XPolynomial(tuple(cs), d)


def _eigen(fam, N):
    L = fam.Lq()
    for n in range(N + 1):
        p = fam.pn(n)
        if L(p) != p * qfamilies.eigenvalue(fam, n):
            return False, f"L_q[P_{n}] is not eigenvalue({n}) P_{n}"
    return True, None


def _even_order(fam, K, N):
    for k in range(1, K + 1):
        L = qpolyops.build_Lkq(fam, k)
        for n in range(N + 1):
            es = qfamilies.eigen_scalars(fam, n, k)
            if not es.consistent:
                return False, f"closed forms disagree at n={n}, k={k}"
            p = fam.pn(n)
            if L(p) != p * es.even_order_eigenvalue:
                return False, f"order-{2 * k} operator misses P_{n}"
    return True, None


def _expansions(fam, K, M):
    for k in range(1, K + 1):
        for direction in ("power_to_Lkq", "Lkq_to_power"):
            ok, bad = qpolyops.expansion_check(fam, k, direction, M)
            if not ok:
                return False, f"{direction} k={k} differs on x^{bad}"
    return True, None


def _scalar_expansion(fam, K, N):
    for n in range(N + 1):
        for k in range(K + 1):
            if not qfamilies.eigenvalue_expansion_check(fam, n, k):
                return False, f"power {k} of eigenvalue({n}) expansion fails"
    return True, None


def _linearity(fam, seed, deg):
    rng = random.Random(seed)
    L = fam.Lq()
    d = fam.d
    for trial in range(5):
        f, g = _random_poly(rng, deg, d), _random_poly(rng, deg, d)
        a = qpolyops.scalar(Laurent("v", {rng.randint(-2, 2): rng.randint(1, 5)}))
        if L(f * a + g) != L(f) * a + L(g):
            return False, f"linearity fails on trial {trial}"
        if not qpolyops.q_leibniz_check(f, g, min(3, deg)):
            return False, f"q-Leibniz fails on trial {trial}"
    return True, None


def operator_checks(families=DEFAULT_FAMILIES, k: int = 3, deg: int = 6, n: int = 10, seed: int = 0, **_) -> list[Check]:
    checks = []
    for spec in families:
        fam = qfamilies.parse_family(spec)
        lab = {"family": spec}
        checks.append(Check("eigen_equation", {**lab, "n": n}, lambda f=fam: _eigen(f, n)))
        checks.append(Check("even_order_eigen", {**lab, "k": k, "n": min(n, 8)}, lambda f=fam: _even_order(f, k, min(n, 8))))
        checks.append(Check("operator_expansions", {**lab, "k": k, "M": deg}, lambda f=fam: _expansions(f, k, deg)))
        checks.append(Check("eigenvalue_expansions", {**lab, "k": k + 1, "n": min(n, 8)}, lambda f=fam: _scalar_expansion(f, k + 1, min(n, 8))))
        checks.append(Check("linearity_and_leibniz", {**lab, "seed": seed}, lambda f=fam: _linearity(f, seed, 4)))
    return checks


def _functional_block(fam, N, M):
    ok, w = qfunctionals.orthogonality_check(fam, N)
    if not ok:
        return False, w
    return True, None


def _rodrigues(fam, N, M):
    for n in range(N + 1):
        if not qfunctionals.rodrigues_check(fam, n, M):
            return False, f"Rodrigues formula fails at n={n}"
        if qfunctionals.rodrigues_constant(fam, n) != qfunctionals.rodrigues_constant_from_norm(fam, n):
            return False, f"Rodrigues constant for n={n} disagrees with its norm form"
    return True, None


def _even_functional(fam, K, N, M):
    for k in range(K + 1):
        for n in range(N + 1):
            if not qfunctionals.even_order_functional_check(fam, n, k, M):
                return False, f"even-order functional identity fails at n={n}, k={k}"
    return True, None


def _norm_ratios(fam, N, K):
    for n in range(N + 1):
        for k in range(K + 1):
            for nu in range(k + 1):
                if qfunctionals.norm_ratio(fam, n, k, nu) != qfunctionals.norm_ratio_product(fam, n, k, nu):
                    return False, f"norm ratio ({n},{k},{k - nu}) forms disagree"
    return True, None


def _derived(fam, K, M):
    for k in range(K + 1):
        if not qfunctionals.derivative_functional_check(fam, k, M):
            return False, f"derivative functional k={k} differs from its Pearson solution"
    phi1, psi1, _ = qfamilies.phi_psi_k(fam, 1)
    u1 = qfunctionals.pearson_moments(phi1, psi1, 14)
    for n in range(7):
        for m in range(n):
            if u1(qfamilies.pn_deriv(fam, n, 1) * qfamilies.pn_deriv(fam, m, 1)):
                return False, f"derivative sequence not orthogonal at ({n},{m})"
    if not qfunctionals.dual_sequence_check(fam, 6):
        return False, "dual sequence identity fails"
    return True, None


def functional_checks(families=DEFAULT_FAMILIES, n: int = 8, k: int = 3, **_) -> list[Check]:
    checks = []
    for spec in families:
        fam = qfamilies.parse_family(spec)
        lab = {"family": spec}
        checks.append(Check("orthogonality", {**lab, "n": n}, lambda f=fam: _functional_block(f, n, 0)))
        checks.append(Check("rodrigues", {**lab, "n": min(n, 5), "M": 10}, lambda f=fam: _rodrigues(f, min(n, 5), 10)))
        checks.append(Check("even_order_functional", {**lab, "k": k, "n": min(n, 6), "M": 10}, lambda f=fam: _even_functional(f, k, min(n, 6), 10)))
        checks.append(Check("norm_ratio_forms", {**lab, "n": 4, "k": k}, lambda f=fam: _norm_ratios(f, 4, k)))
        checks.append(Check("derived_functionals", {**lab, "k": k}, lambda f=fam: _derived(f, k, 8)))
    return checks


SUITES = {
    "stirling": stirling_checks,
    "combinatorics": combinatorics_checks,
    "operators": operator_checks,
    "functionals": functional_checks,
}


def build_suite(name: str, **opts) -> list[Check]:
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(build_suite(key, **opts))
        return out
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
    return fn(**{k: v for k, v in opts.items() if v is not None})
