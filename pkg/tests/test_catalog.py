import pytest

from quartic_qseries.catalog import ELLIPTIC, EXACT, IDENTITY_IDS, KINDS, NUMERIC, identity, registry
from quartic_qseries.errors import UnknownIdentity
from quartic_qseries.expr import Parity

EXPECTED = {
    "thm-4u2", "prop-u-quadratic", "spec-bd-q2", "andrews-ismail-stanton", "cor-rahman-x",
    "rec-u-q3", "iter-u-q3", "thm-4u3", "prop-u-cubic", "qbd-limit", "cor-rahman-y",
    "rec-u-q4", "iter-u-q4", "thm-4u4", "prop-4u4-special", "ustar-inversion", "eq-star",
    "cor-q2f1", "stanton-rr", "cor-qq2f1", "rec-u-q1", "thm-4v2", "cor-v2-new", "rec-v-q3",
    "thm-4v3", "cor-chu-48d", "cor-chu-wang-40", "rec-v-q4", "thm-4v4", "cor-nuova",
    "rec-v-q1", "ell-1", "ell-2", "ell-3",
}


def test_catalog_size_and_ids():
    ids = [e.id for e in registry()]
    assert len(ids) >= 30
    assert len(set(ids)) == len(ids)
    assert EXPECTED <= set(ids)
    assert tuple(ids) == IDENTITY_IDS


def test_kinds_valid():
    for e in registry():
        assert e.kind in KINDS
        assert set(e.meta) <= {"n", "m", "delta"}
        assert "q" in e.free


def test_thm_4u2_entry():
    e = identity("thm-4u2")
    assert e.kind == EXACT and set(e.meta) == {"n", "m"}


def test_cor_rahman_x_entry():
    e = identity("cor-rahman-x")
    assert e.kind == NUMERIC and e.meta == ("delta",)
    assert e.ranges["delta"] == (0, 1)


def test_ell_1_has_parity_indicator():
    e = identity("ell-1")
    assert e.kind == ELLIPTIC and e.meta == ("m",)
    assert isinstance(e.rhs, Parity)


def test_elliptic_entries():
    assert {e.id for e in registry() if e.kind == ELLIPTIC} == {"ell-1", "ell-2", "ell-3"}


def test_anchors_are_plain_locators():
    for e in registry():
        assert e.anchor
        assert "§" not in e.anchor


def test_constrained_parameters_not_sampled():
    for e in registry():
        assert not set(e.subs) & set(e.free), e.id


def test_catalog_is_stable():
    assert registry() == registry()
    assert identity("thm-4v4") is identity("thm-4v4")


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        identity("thm-9x9")
    with pytest.raises(KeyError):
        identity("nope")
