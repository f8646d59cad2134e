import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quartic_qseries.abel import check_lemma, check_pair, check_r_split, compose_recurrence, lemma_sides
from quartic_qseries.errors import Pole
from quartic_qseries.pairs import PAIR_NAMES, pair
from quartic_qseries.scalar import Binding

from oracles import naive_partial_sum


def fr(v):
    return Fraction(int(v.numerator), int(v.denominator))


def bindings(p, seed, count):
    """``count`` pole-free exact bindings for pair ``p``."""
    rng = random.Random(f"abel:{p.name}:{seed}")
    out = []
    while len(out) < count:
        seeds = {"q": Fraction(rng.randint(1, 40), rng.randint(1, 40))}
        if seeds["q"] == 1:
            continue
        for s in p.params:
            seeds[s] = Fraction(rng.randint(1, 40), rng.randint(1, 40))
        b = Binding.exact(seeds=seeds)
        try:
            check_pair(p, b, 4)
        except (Pole, ZeroDivisionError):
            continue
        out.append(b)
    return out


# --- the bare lemma --------------------------------------------------------


def test_lemma_constant_sequences():
    for n in range(6):
        lhs, rhs = lemma_sides([1] * (n + 1), [1] * (n + 1), n)
        assert lhs == rhs == 0


def test_lemma_empty_range():
    assert check_lemma([Fraction(3)], [Fraction(5)], 0)


def test_lemma_short_input():
    with pytest.raises(ValueError):
        lemma_sides([1, 2], [1, 2, 3], 3)


@given(st.integers(0, 12).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.fractions(max_denominator=50), min_size=n + 1, max_size=n + 1),
    st.lists(st.fractions(max_denominator=50), min_size=n + 1, max_size=n + 1))))
def test_lemma_random(case):
    n, A, B = case
    assert check_lemma(A, B, n)


def test_lemma_detects_tampering():
    # sanity: a broken right side is noticed
    A = [Fraction(i + 2, 3) for i in range(5)]
    B = [Fraction(7, i + 1) for i in range(5)]
    lhs, rhs = lemma_sides(A, B, 4)
    assert lhs == rhs and lhs + 1 != rhs


# --- pairs -----------------------------------------------------------------


@pytest.mark.parametrize("name", PAIR_NAMES)
def test_pair_all_subchecks(name):
    p = pair(name)
    for b in bindings(p, 0, 3):
        rep = check_pair(p, b, 3)
        assert rep.ok, rep.failures()
        assert {c.name for c in rep.checks} == {
            "nabla_A", "delta_B", "varpi", "R", "sum_B_nabla_A", "sum_A_delta_B"}


def test_pair_n_zero_vacuous():
    p = pair("v_cubic")
    (b,) = bindings(p, 1, 1)
    rep = check_pair(p, b, 0)
    assert rep.ok
    assert rep.by_name("nabla_A") == [] and rep.by_name("delta_B") == []
    assert len(rep.by_name("varpi")) == 1


def test_u_quartic_shifted_against_oracle():
    p = pair("u_quartic")
    (b,) = bindings(p, 2, 1)
    rep = check_pair(p, b, 4)
    assert rep.ok
    v = {s: fr(x) for s, x in b.values.items()}
    q, a, bb, d = v["q"], v["a"], v["b"], v["d"]
    shifted = naive_partial_sum("U", 4, {"q": q, "a": q * a, "b": q ** 4 * bb, "d": d / q ** 2})
    pref = ((1 - bb / a) * (1 - q * q * bb) * (1 - bb * bb * d * d / (q ** 3 * a * a))
            / ((1 - bb * d) * (1 - bb * bb * d / (q * a * a)) * (1 - q ** 3 * a / d)
               * (1 - bb * d / (q * q * a))))
    (check,) = rep.by_name("sum_A_delta_B")
    assert fr(check.rhs) == shifted * pref


def test_pair_report_carries_values():
    p = pair("u_quad")
    (b,) = bindings(p, 3, 1)
    rep = check_pair(p, b, 2)
    for c in rep.checks:
        assert c.lhs == c.rhs


# --- R-splitting -----------------------------------------------------------


@pytest.mark.parametrize("name", PAIR_NAMES)
def test_r_split_zero_shift(name):
    p = pair(name)
    (b,) = bindings(p, 4, 1)
    rep = check_r_split(p, 0, 3, b)
    assert rep.ok
    assert rep.direct == check_pair(p, b, 3).by_name("R")[0].rhs


@pytest.mark.parametrize("name", PAIR_NAMES)
def test_r_split_empty_n(name):
    p = pair(name)
    for b in bindings(p, 5, 5):
        try:
            rep = check_r_split(p, 2, 0, b)
        except (Pole, ZeroDivisionError):
            continue
        assert rep.ok and rep.direct == 1
        return
    pytest.fail("no pole-free binding")


@pytest.mark.parametrize("name", PAIR_NAMES)
def test_r_split_k2_n3(name):
    p = pair(name)
    done = 0
    for b in bindings(p, 6, 6):
        try:
            rep = check_r_split(p, 2, 3, b)
        except (Pole, ZeroDivisionError):
            continue
        assert rep.ok, (rep.direct, rep.closed, rep.forms)
        done += 1
    assert done >= 3


# --- recurrences -----------------------------------------------------------


@pytest.mark.parametrize("name", PAIR_NAMES)
def test_composition_m3(name):
    p = pair(name)
    done = 0
    for b in bindings(p, 7, 4):
        try:
            rep = compose_recurrence(p, b, 2, 3)
        except (Pole, ZeroDivisionError):
            continue
        assert rep.ok, rep
        done += 1
    assert done >= 2


@pytest.mark.parametrize("name", PAIR_NAMES)
def test_composition_m0_is_identity(name):
    p = pair(name)
    (b,) = bindings(p, 8, 1)
    rep = compose_recurrence(p, b, 2, 0)
    assert rep.coefficient[0] == 1 and rep.offset[0] == 0
    assert rep.ok
