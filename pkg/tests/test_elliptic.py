from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quartic_qseries.catalog import identity
from quartic_qseries.elliptic import ELLIPTIC_IDS, basic_counterpart, ell_poch, theta, verify_elliptic
from quartic_qseries.errors import ZeroArgument
from quartic_qseries.identities import verify_exact, verify_numeric
from quartic_qseries.scalar import Binding, poch

from oracles import theta_reference

EPS = mpmath.mpf("1e-35")


def mp(x):
    return mpmath.mpf(x)


def approx(**vals):
    return Binding.approx({k: Fraction(v) for k, v in vals.items()}, precision=60)


# --- theta -----------------------------------------------------------------


def test_theta_at_p_zero():
    with mpmath.workdps(60):
        for x in ("0.3", "1.7", "-2.5"):
            assert theta(mp(x), 0, EPS) == 1 - mp(x)


def test_theta_zero_argument():
    with pytest.raises(ZeroArgument):
        theta(0, mp("0.1"), EPS)


def test_theta_nome_bound():
    with pytest.raises(ValueError):
        theta(mp("0.5"), mp("1.2"), EPS)


def test_theta_reference_depth():
    with mpmath.workdps(60):
        v = theta(mp("0.5"), mp("0.1"), EPS)
        assert abs(v - theta_reference(mp("0.5"), mp("0.1"), 200)) < EPS


@given(st.floats(0.1, 3.0), st.floats(0.001, 0.2))
def test_theta_inversion(x, p):
    with mpmath.workdps(60):
        x, p = mp(x), mp(p)
        lhs = theta(x, p, EPS)
        rhs = -x * theta(1 / x, p, EPS)
        assert abs(lhs - rhs) < 10 * EPS * max(1, abs(lhs))


@given(st.floats(0.1, 3.0), st.floats(0.001, 0.2))
def test_theta_quasi_periodicity(x, p):
    with mpmath.workdps(60):
        x, p = mp(x), mp(p)
        lhs = theta(p * x, p, EPS)
        rhs = -theta(x, p, EPS) / x
        assert abs(lhs - rhs) < 10 * EPS * max(1, abs(rhs))


# --- elliptic shifted factorials -------------------------------------------


def test_ell_poch_empty():
    with mpmath.workdps(60):
        assert ell_poch(mp("0.3"), mp("0.5"), mp("0.05"), 0, EPS) == 1


def test_ell_poch_negative_length():
    with pytest.raises(ValueError):
        ell_poch(mp("0.3"), mp("0.5"), mp("0.05"), -1, EPS)


def test_ell_poch_p_zero_is_basic():
    with mpmath.workdps(60):
        for n in range(6):
            got = ell_poch(mp("0.3"), mp("0.5"), 0, n, EPS)
            assert abs(got - poch(mp("0.3"), mp("0.5"), n)) < EPS


def test_ell_poch_against_theta_oracle():
    with mpmath.workdps(60):
        x, q, p = mp("0.3"), mp("0.5"), mp("0.05")
        ref = theta_reference(x, p) * theta_reference(x * q, p) * theta_reference(x * q * q, p)
        assert abs(ell_poch(x, q, p, 3, mp("1e-30")) - ref) < mp("1e-30")


# --- identity checks -------------------------------------------------------


def test_ell_1_odd_m_vanishes():
    for m in (1, 3, 5):
        r = verify_elliptic("ell-1", approx(q="0.45", a="0.35"), p="0.05", m=m)
        assert r.ok and r.rhs == 0
        assert abs(r.lhs) < mp("1e-25")


@pytest.mark.parametrize("id_", ELLIPTIC_IDS)
def test_elliptic_passes(id_):
    for m in range(5):
        for p in ("0.02", "0.1", "0.2"):
            r = verify_elliptic(id_, approx(q="0.4", a="0.3"), p=p, m=m)
            assert r.ok and r.mode == "elliptic", (m, p, r.residual)


def test_ell_3_reference_example():
    r = verify_elliptic("ell-3", approx(q="0.4", a="0.3"), p="0.05", m=2, eps="1e-25")
    assert r.ok


@pytest.mark.parametrize("id_", ELLIPTIC_IDS)
def test_p_zero_matches_basic(id_):
    basic = basic_counterpart(id_)
    for m in range(5):
        bind = approx(q="0.35", a="0.6")
        ell = verify_elliptic(id_, bind, p=0, m=m, eps="1e-30")
        base = verify_numeric(basic, bind, eps="1e-30", m=m)
        assert ell.ok and base.ok
        assert abs(ell.lhs - base.lhs) < mp("1e-30")
        assert abs(ell.rhs - base.rhs) < mp("1e-30")


def test_ell_3_exact_equals_cor_nuova():
    seeds = {"q": Fraction(3, 5), "a": Fraction(4, 7)}
    for m in range(5):
        bind = Binding.exact(seeds=seeds)
        ell = verify_elliptic("ell-3", bind, m=m)
        nuova = verify_exact("cor-nuova", bind, m=m)
        assert ell.ok and nuova.ok
        assert ell.lhs == nuova.lhs and ell.rhs == nuova.rhs


def test_counterparts_are_terminating():
    assert basic_counterpart("ell-3") is identity("cor-nuova")
    for id_ in ("ell-1", "ell-2"):
        c = basic_counterpart(id_)
        assert c.meta == ("m",) and "d" in c.subs


def test_non_elliptic_rejected():
    with pytest.raises(ValueError):
        verify_elliptic("thm-4u2", approx(q="0.4", a="0.3"), p="0.05", m=1)
