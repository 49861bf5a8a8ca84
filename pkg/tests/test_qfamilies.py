from __future__ import annotations

from fractions import Fraction

import pytest
from conftest import at
from frozen import FROZEN, POINTS

from qjstirling import qfamilies as qf
from qjstirling.qpolyops import qpow

FAMILIES = ["asc:a=-1", "asc:a=2", "dqh", "sw", "lqj:a=q,b=q^2", "lqj:a=1/2,b=1/3"]
ORACLE_TAGS = {"asc_-1": "asc:a=-1", "asc_2": "asc:a=2", "lqj_q_q2": "lqj:a=q,b=q^2", "lqj_half_third": "lqj:a=1/2,b=1/3"}


def _poly_at_points(p):
    return tuple(tuple(at(c, t) for t in POINTS) for c in p.coeffs)


@pytest.mark.parametrize("tag", sorted(ORACLE_TAGS))
def test_polynomials_and_eigenvalues_match_oracle(tag):
    fam = qf.parse_family(ORACLE_TAGS[tag])
    for key in FROZEN:
        if not key.startswith(tag + "_"):
            continue
        what = key[len(tag) + 1 :]
        n = int(what[-1])
        if what.startswith("P"):
            assert _poly_at_points(fam.pn(n)) == FROZEN[key]
        else:
            assert tuple(at(qf.eigenvalue(fam, n), t) for t in POINTS) == FROZEN[key]


def test_stieltjes_wigert_eigenvalues_match_oracle():
    fam = qf.stieltjes_wigert()
    for n in (2, 3, 4):
        assert tuple(at(qf.eigenvalue(fam, n), t) for t in POINTS) == FROZEN[f"sw_chi{n}"]


@pytest.mark.parametrize("spec", FAMILIES)
def test_eigen_equation(spec):
    fam = qf.parse_family(spec)
    L = fam.Lq()
    for n in range(9):
        p = fam.pn(n)
        assert p.is_monic() and p.degree == n
        assert L(p) == p * qf.eigenvalue(fam, n)


@pytest.mark.parametrize("spec", FAMILIES)
def test_two_routes_to_the_eigen_scalars(spec):
    fam = qf.parse_family(spec)
    for n in range(7):
        for k in range(4):
            assert qf.eigen_scalars(fam, n, k).consistent
            assert qf.eigenvalue_expansion_check(fam, n, k)


@pytest.mark.parametrize("spec", ["asc:a=-1", "asc:a=2", "lqj:a=q,b=q^2", "lqj:a=1/2,b=1/3"])
def test_explicit_sums(spec):
    fam = qf.parse_family(spec)
    for n in range(5):
        assert qf.explicit_pn(fam, n) == fam.pn(n)


def test_stieltjes_wigert_sum_needs_the_pochhammer_ratio():
    fam = qf.stieltjes_wigert()
    assert qf.explicit_pn(fam, 0) == fam.pn(0)
    assert qf.explicit_pn(fam, 1) != fam.pn(1)
    for n in range(6):
        assert qf.explicit_pn(fam, n, variant="corrected") == fam.pn(n)


@pytest.mark.parametrize("spec", ["sw", "lqj:a=q,b=q^2"])
def test_shifted_eigenvalue_closed_form(spec):
    fam = qf.parse_family(spec)
    for n in range(1, 6):
        for k in range(n + 1):
            assert qf.shifted_eigenvalue_difference(fam, n, k) == qf.shifted_eigenvalue(fam, n - k, k)
    # the exponent k-1 only coincides with -k-1 at k=0
    assert qf.shifted_eigenvalue_difference(fam, 4, 2, exponent=1) != qf.shifted_eigenvalue(fam, 2, 2)


def test_derivative_sequences_are_q_classical():
    fam = qf.parse_family("lqj:a=1/2,b=1/3")
    for k in (1, 2):
        phi_k, psi_k, _ = qf.phi_psi_k(fam, k)
        from qjstirling.qpolyops import build_Lq

        L = build_Lq(phi_k, psi_k)
        for n in range(5):
            p = qf.pn_deriv(fam, n, k)
            assert L(p) == p * qf.shifted_eigenvalue(fam, n, k)


def test_discrete_q_hermite_is_asc_minus_one():
    a, b = qf.discrete_q_hermite(), qf.al_salam_carlitz(-1)
    assert all(a.pn(n) == b.pn(n) for n in range(6))
    assert a.label() == "discrete_q_hermite"
    assert qf.al_salam_carlitz(2).label() == "al_salam_carlitz(a=2)"


def test_z_parameter_for_monic_quadratic():
    fam = qf.parse_family("lqj:a=q,b=q^2")
    z = qf.z_parameter(fam)
    assert z == -(1 + qpow(1) * qf.psi_slope(fam))


@pytest.mark.parametrize(
    "bad",
    [
        lambda: qf.al_salam_carlitz(0),
        lambda: qf.little_q_jacobi(Fraction(1, 2), 0),
        lambda: qf.little_q_jacobi(qpow(-3), Fraction(1, 2)),
        lambda: qf.little_q_jacobi(qpow(-1), qpow(-1)),
    ],
)
def test_degenerate_parameters(bad):
    with pytest.raises(qf.RegularityError):
        bad()


def test_parse_errors():
    with pytest.raises(ValueError):
        qf.parse_family("hermite")
    with pytest.raises(ValueError):
        qf.parse_family("asc:a")
    with pytest.raises(ValueError):
        qf.pn(qf.stieltjes_wigert(), -1)
