"""Registry of verifiable identities.

Every entry is an ``lhs == rhs`` pair of expression trees written in the
product notation of :mod:`quartic_qseries.notation`.  Constrained parameters
are listed in ``subs`` and are always derived from the free ones, so a random
binding can never drift off the constraint surface.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import UnknownIdentity
from .expr import Const, Expr, Function, Parity
from .notation import Parser
from .pairs import PAIRS, base_parser
from .series import series_function

EXACT = "terminating_exact"
NUMERIC = "nonterminating_numeric"
ELLIPTIC = "elliptic_numeric"
KINDS = (EXACT, NUMERIC, ELLIPTIC)


@dataclass(frozen=True)
class IdentityDef:
    id: str
    kind: str
    meta: tuple                 # subset of ("n", "m", "delta")
    lhs: Expr
    rhs: Expr
    free: tuple                 # symbols sampled independently (q always included)
    anchor: str                 # short locator for auditing against the source
    subs: Mapping[str, str] = field(default_factory=dict)
    ranges: Mapping[str, tuple] = field(default_factory=dict)   # meta -> (lo, hi) inclusive
    domain: Mapping[str, tuple] = field(default_factory=dict)   # numeric sampling boxes
    notes: str = ""

    def meta_range(self, var: str, hi: int) -> range:
        lo, top = self.ranges.get(var, (0, hi))
        return range(lo, min(top, hi) + 1)


def parser() -> Parser:
    """Series aliases plus the two limit series."""
    P = base_parser()
    for alias, name in (("Lq", "limit_u_quadratic"), ("Lc", "limit_u_cubic")):
        fn = series_function(name)
        P.add(Function(alias, fn.params, fn.body, fn.count_var))
    return P


# numeric sampling boxes
_POS = (0.1, 0.9)
_Q = (0.2, 0.7)


def _theorems(P) -> list:
    out = []

    def thm(id_, series, params, shift, coeff, pref, aux, tail_shift, tail, anchor, notes=""):
        p = ",".join(params)
        lhs = P(f"{series}_n({p}) - {series}_n({shift}) {{{coeff}}}")
        rhs = P(f"{{{pref}}} {{{aux}_m({p}) - {aux}_m({tail_shift}) {{{tail}}}}}")
        out.append(IdentityDef(id_, EXACT, ("n", "m"), lhs, rhs, ("q",) + tuple(params),
                               anchor, notes=notes))

    thm("thm-4u2", "U", "abd", "q^{3m}a,b,d",
        "(q^2a/bd;q)_{3m} [q^3a^2/bd,q^9a^2/b^2d^3,q^9a^2/b^3d^2;q^6]_m"
        " // (q^5a^2/b^2d^2;q^2)_{3m} [q^3a/b,q^3a/d,q^6a/b^2d^2;q^3]_m",
        "(1-q^3a/bd) (1-bd/q^2) (1-bd/q^4)"
        " // (1-q^5a^2/b^2d^2) (1-q^7a^2/b^2d^2) (1-b^2d^2/q^6a)",
        "Ud", "q^{5n}a,q^{2n}b,q^{2n}d",
        "(q^3a^2/bd;q^6)_n [b,d;q^2]_n [q^2a/bd,q^4a/bd;q]_n (b^2d^2/q^6a;q^3)_n"
        " // (bd/q^3a;q^{-1})_n (q^9a^2/b^2d^2;q^2)_n (bd/q^4;q^2)_{2n} [q^3a/b,q^3a/d;q^3]_n",
        "Theorem: transformation between quartic and quadratic series (U)")
    thm("thm-4u3", "U", "abd", "q^{4m}a,q^{4m}b,q^{-2m}d",
        "(b;q^2)_{2m} (q^2a/bd;q)_{2m} [q^3a^2/bd,q^9a^2/b^2d^3;q^6]_m"
        " // (q^5a^2/b^2d^2;q^2)_{2m} (q^3a/d;q^3)_{2m} [q^2/d,bd;q^2]_m",
        "(1-bd/q^2) (1-q^3a/bd) (1-a/b) // (1-d/q^2) (1-q^3a/d) (1-q^5a^2/b^2d^2)",
        "Ut", "q^{5n}a,q^{2n}b,q^{2n}d",
        "[q^2a/bd,q^4a/bd;q]_n [b,d/q^2;q^2]_n (b^2d^2/q^3a;q^3)_n (q^3a^2/bd;q^6)_n"
        " // (bd/q^2;q^2)_{2n} (q^7a^2/b^2d^2;q^2)_n [a/b,q^6a/d;q^3]_n (bd/q^3a;q^{-1})_n",
        "Theorem: transformation between quartic and cubic series (U)")
    thm("thm-4u4", "U", "abd", "q^{m}a,q^{4m}b,q^{-2m}d",
        "(b^2d^2/q^3a^2;q^2)_m (b;q^2)_{2m} [b^2d^2/q^3a,b/a;q^3]_m (q^2a/bd;q^{-1})_m"
        " // [bd,q^2/d;q^2]_m [bd/qa,bd/q^2a;q]_m (q^3a/d;q^3)_m (b^3d^2/q^3a^2;q^6)_m",
        "(1-a/b) (1-bd/q^2) (1-b^2d^2/q^3a^2) // (1-d/q^2) (1-bd/qa) (1-b^3d^2/q^3a^2)",
        "Us", "q^{5n}a,q^{2n}b,q^{2n}d",
        "[qa/bd,q^2a/bd;q]_n [b,d/q^2;q^2]_n (b^2d^2/q^3a;q^3)_n (q^3a^2/bd;q^6)_n"
        " // (bd/q^2;q^2)_{2n} (q^3a^2/b^2d^2;q^2)_n [a/b,q^3a/d;q^3]_n (bd/q^2a;q^{-1})_n",
        "Theorem: transformation between two quartic series (U)")
    thm("thm-4v2", "V", "ace", "q^{3m}a,q^{3m}c,q^{3m}e",
        "[qc,qe,qc^2e^2/a^3;q^3]_m (qc^2e^2/a^2;q^2)_{3m}"
        " // [q^5ce,q^2c^2e^3/a^3,q^2c^3e^2/a^3;q^6]_m (qce/a;q)_{3m}",
        "(1-a/qc) (1-a/qe) (1-qc^2e^2/a^3) // (1-a/q^2ce) (1-q^2c^3e^2/a^3) (1-q^2c^2e^3/a^3)",
        "Vd", "q^{5n}a,q^{3n}c,q^{3n}e",
        "(a^2/ce;q^2)_{2n} (qc^2e^2/a^2;q^2)_n [qc,qe;q^3]_n (a/q^2ce;q^{-1})_n"
        " // [qce/a,q^3ce/a;q]_n [a/qc,a/qe;q^2]_n (a^3/qc^2e^2;q^3)_n (q^5ce;q^6)_n",
        "Theorem: transformation between quartic and quadratic series (V)")
    thm("thm-4v3", "V", "ace", "q^{4m}a,q^{6m}c,e",
        "(qc;q^3)_{2m} (qc^2e^2/a^2;q^2)_{2m} [qc/a,a^2/ce;q^2]_m"
        " // (qce/a;q)_{2m} (qa/e;q^2)_{2m} [q^5ce,q^2c^3e^2/a^3;q^6]_m",
        "(1-ce/a) (1-qc/a) (1-a^3/qc^2e^2) // (1-a/qce) (1-qa/e) (1-q^2c^3e^2/a^3)",
        "Vt", "q^{5n}a,q^{3n}c,q^{3n}e",
        "(a^2/ce;q^2)_{2n} (qc^2e^2/a^2;q^2)_n [qc,qe;q^3]_n (a/qce;q^{-1})_n"
        " // [ce/a,q^2ce/a;q]_n [a/qc,q^3a/e;q^2]_n (a^3/qc^2e^2;q^3)_n (q^5ce;q^6)_n",
        "Theorem: transformation between quartic and cubic series (V)")
    thm("thm-4v4", "V", "ace", "q^{m}a,q^{3m}c,q^{-3m}e",
        "[qc/a,a^2/ce;q^2]_m [a/ce,qa/ce;q]_m (qc;q^3)_m (q^4a^3/c^2e^3;q^6)_m"
        " // (qa^2/c^2e^2;q^2)_m (qa/e;q^2)_{2m} [q^2a^3/c^2e^2,q^2/e;q^3]_m (ce/qa;q^{-1})_m",
        "(1-a/qc) (1-a/ce) (1-ce/q) // (1-qa^2/c^2e^2) (1-e/q^2) (1-qa/e)",
        "Vs", "q^{5n}a,q^{3n}c,q^{3n}e",
        "(a^2/ce;q^2)_{2n} (c^2e^2/qa^2;q^2)_n [qc,e/q^2;q^3]_n (qa/ce;q^{-1})_n"
        " // [ce/qa,ce/a;q]_n [a/qc,q^3a/e;q^2]_n (q^2a^3/c^2e^2;q^3)_n (ce/q;q^6)_n",
        "Theorem: transformation between two quartic series (V)",
        notes="coefficient length of [q^2a^3/c^2e^2,q^2/e;q^3] read as m, not n")
    return out


_REC = {
    "u_quad": ("rec-u-q3", "iter-u-q3"),
    "u_cubic": ("rec-u-q4", "iter-u-q4"),
    "u_quartic": ("rec-u-q1", "iter-u-q1"),
    "v_quad": ("rec-v-q3", "iter-v-q3"),
    "v_cubic": ("rec-v-q4", "iter-v-q4"),
    "v_quartic": ("rec-v-q1", "iter-v-q1"),
}


def _recurrences(P) -> list:
    out = []
    for pname, (rid, iid) in _REC.items():
        pr = PAIRS[pname]
        lhs = P(f"{pr.series}_n({','.join(pr.params)})")
        free = ("q",) + pr.params
        side = "U" if pr.series == "U" else "V"
        out.append(IdentityDef(rid, EXACT, ("n",), lhs, pr.recurrence, free,
                               f"One-step recurrence for {side}_n from the {pname} pair"))
        out.append(IdentityDef(iid, EXACT, ("n", "m"), lhs, pr.iteration, free,
                               f"m-step iteration for {side}_n from the {pname} pair"))
    return out


def _u_side(P) -> list:
    out = []
    quad_pref = ("(1-q^3a/bd) (1-bd/q^2) (1-bd/q^4)"
                 " // (1-q^5a^2/b^2d^2) (1-q^7a^2/b^2d^2) (1-b^2d^2/q^6a)")
    out.append(IdentityDef(
        "prop-u-quadratic", NUMERIC, (), P("U_inf(a,b,d)"),
        P(f"{{{quad_pref}}} Ud_inf(a,b,d)"
          " + {(q^2a/bd;q)_inf [q^3a^2/bd,q^9a^2/b^2d^3,q^9a^2/b^3d^2;q^6]_inf"
          " // (q^5a^2/b^2d^2;q^2)_inf [q^3a/b,q^3a/d,q^6a/b^2d^2;q^3]_inf} Lq(b,d)"),
        ("q", "a", "b", "d"), "Proposition: nonterminating series transformation (quadratic)",
        domain={"a": _POS, "b": _POS, "d": _POS}))
    out.append(IdentityDef(
        "spec-bd-q2", NUMERIC, ("delta",), P("U_inf(a,b,d)"),
        P("{[a,q^{1-2delta}a;q^3]_inf // [q^3a/b,q^{1-2delta}ab;q^3]_inf}"
          " {[q^{3-6delta}a^2b,q^{5-4delta}a^2/b;q^6]_inf // [q^{3-6delta}a^2,q^{5-4delta}a^2;q^6]_inf}"
          " SUM_{k<inf}{[b,q^{2+2delta}/b;q^2]_k q^{4C(k,2)+(2+2delta)k} // (q^{2+2delta};q^2)_{2k}}"),
        ("q", "a", "b"), "Specialization bd = q^(2+2delta) of the quadratic proposition",
        subs={"d": "q^{2+2delta}/b"}, ranges={"delta": (0, 1)},
        domain={"a": _POS, "b": _POS}))
    out.append(IdentityDef(
        "andrews-ismail-stanton", NUMERIC, ("delta",),
        P("SUM_{k<inf}{[b,q^{2+2delta}/b;q^2]_k q^{4C(k,2)+(2+2delta)k} // (q^{2+2delta};q^2)_{2k}}"),
        P("[q^{2+2delta}b,q^{4+4delta}/b;q^6]_inf // [q^{2+2delta},q^{4+4delta};q^6]_inf"),
        ("q", "b"), "Andrews / Ismail-Stanton summation",
        ranges={"delta": (0, 1)}, domain={"b": _POS}))
    out.append(IdentityDef(
        "cor-rahman-x", NUMERIC, ("delta",),
        P("SUM_{k<inf}{(1-q^{5k+2delta}a) [b,q^{2+2delta}/b;q^2]_k (a;q)_k (q^{1+2delta}/a;q^3)_k"
          " (q^{1+2delta}a^2;q^6)_k q^{C(k+1,2)} (-a)^k"
          " // (1-q^{2delta}a) (qa^2;q^2)_k (q^{2+2delta};q^2)_{2k} [qab,q^{3+2delta}a/b;q^3]_k}"),
        P("{[qa,q^{3+2delta}a;q^3]_inf // [qab,q^{3+2delta}a/b;q^3]_inf}"
          " {[q^5a^2/b,q^{3-2delta}a^2b,q^{2+2delta}b,q^{4+4delta}/b;q^6]_inf"
          " // [q^5a^2,q^{3-2delta}a^2,q^{2+2delta},q^{4+4delta};q^6]_inf}"),
        ("q", "a", "b"), "Corollary: Gasper-Rahman Exercise 3.29(ii),(iii)",
        ranges={"delta": (0, 1)}, domain={"a": _POS, "b": _POS}))
    out.append(IdentityDef(
        "prop-u-cubic", NUMERIC, (), P("U_inf(a,b,d)"),
        P("{(1-bd/q^2) (1-q^3a/bd) (1-a/b) // (1-d/q^2) (1-q^3a/d) (1-q^5a^2/b^2d^2)} Ut_inf(a,b,d)"
          " + {(q^2a/bd;q)_inf (b;q^2)_inf [q^3a^2/bd,q^9a^2/b^2d^3;q^6]_inf"
          " // (q^3a/d;q^3)_inf [q^2/d,bd,q^5a^2/b^2d^2;q^2]_inf}"
          " SUM_{k<inf}{(q^3a/b)^k (b^2d^2/q^3a;q^3)_k q^{3C(k,2)} // (q^3a/b;q^3)_k}"),
        ("q", "a", "b", "d"), "Proposition: nonterminating series transformation (cubic)",
        domain={"a": _POS, "b": _POS, "d": _POS}))
    out.append(IdentityDef(
        "qbd-limit", NUMERIC, (),
        P("SUM_{k<inf}{(a/q^3;q^3)_k q^{3C(k,2)+3k} // (q^3;q^3)_k}"),
        P("(a;q^6)_inf // (q^3;q^6)_inf"),
        ("q", "a"), "Limiting q-Bailey-Daum summation", domain={"a": _POS}))
    out.append(IdentityDef(
        "cor-rahman-y", NUMERIC, (),
        P("SUM_{k<inf}{(1-q^{5k}a) [a,d;q^2]_k (ad^2/q^3;q^3)_k (q^2/d;q)_k (q^3a/d;q^6)_k"
          " q^{C(k,2)} (-q^3/d)^k"
          " // (1-a) (q^5/d^2;q^2)_k [q^3,q^3a/d;q^3]_k (ad;q^2)_{2k}}"),
        P("{[q^2a,q^3/d;q^2]_inf // [ad,q^5/d^2;q^2]_inf} {[ad^2,q^9/d^3;q^6]_inf // [q^3,q^6a/d;q^6]_inf}"),
        ("q", "a", "d"), "Corollary: Gasper-Rahman Exercise 3.29(i)",
        domain={"a": _POS, "d": _POS}))
    out.append(IdentityDef(
        "prop-4u4-special", EXACT, ("n",), P("U_n(a,b,d)"),
        P("Us_n(q^{5n}a,q^{2n}b,q^{2n}d)"
          " {(a;q^3)_n (bd;q^6)_n (qa/bd;q)_n (q^3a/bd;q)_{n-1} [q^2b,d;q^2]_{n-1}"
          " // (q^3a/d;q^3)_n (q^3a/b;q^3)_{n-1} (qa/bd;q^{-1})_n (bd;q^2)_{2n-1} (q^2;q^2)_{n-1}}"),
        ("q", "a", "b"), "Proposition: two quartic series under q^3a^2 = b^2d^2",
        subs={"d": "q^{3/2}a/b"}, ranges={"n": (1, 5)},
        notes="n = 0 excluded: (q^2;q^2)_{-1} is a pole of the negative-length extension"))
    out.append(IdentityDef(
        "ustar-inversion", EXACT, ("n",), P("Us_n(q^{5n}a,q^{2n}b,q^{3/2+2n}a/b)"),
        P("(-1)^{n-1} {(q^2;q^2)_{n-1} (q^3a/b;q^3)_{n-1} // (q^{3/2}a/b;q^2)_{n-1} (q^{1/2};q)_{n-1}}"
          " q^{(1-n*n)/2}"
          " SUM_{k<n}{(-1)^k (q^{1/2};q)_k (q^{3/2}a/b;q^2)_k q^{k*(k+2)/2}"
          " (1-q^{6n-5k-9/2}b) (q^{2n}b;q^2)_{2n-2-2k} (q^{3n}a;q^3)_{n-1-k}"
          " // (q^2;q^2)_k (q^3a/b;q^3)_k"
          " (q^{4n-1/2}a;q^2)_{n-1-k} (q^{3/2+3n}b;q^3)_{n-1-k} (q^6b;q^6)_{n-1-k}}"),
        ("q", "a", "b"), "Index inversion k -> n-1-k of the shifted U-star sum",
        ranges={"n": (1, 5)},
        notes="n = 0 excluded: (q^2;q^2)_{-1} is a pole of the negative-length extension"))
    out.append(IdentityDef(
        "eq-star", NUMERIC, (), P("U_inf(a,b,d)"),
        P("{(b;q^2)_inf (a;q^3)_inf (q^{3/2}a;q^6)_inf // (q^{3/2}a;q^2)_inf (q^{3/2}b;q^3)_inf (b;q^6)_inf}"
          " SUM_{k<inf}{(-q^{3/2})^k (q^{1/2};q)_k (q^{3/2}a/b;q^2)_k q^{C(k,2)} // (q^2;q^2)_k (q^3a/b;q^3)_k}"),
        ("q", "a", "b"), "Transformation of U(a,b,q^(3/2)a/b) (starred equation)",
        subs={"d": "q^{3/2}a/b"}, domain={"a": _POS, "b": _POS}))
    out.append(IdentityDef(
        "cor-q2f1", NUMERIC, (),
        P("SUM_{k<inf}{(-q^{3/2})^k (q^{1/2};q)_k (q^{3/2}a;q^2)_k q^{C(k,2)} // (q^2;q^2)_k (q^3a;q^3)_k}"),
        P("(q^{3/2}a;q^2)_inf (q^{3/2};q^3)_inf (q^6;q^6)_inf"
          " // (q^2;q^2)_inf (q^3a;q^3)_inf (q^{3/2}a;q^6)_inf"),
        ("q", "a"), "Corollary: nonterminating series identity (first)", domain={"a": _POS}))
    out.append(IdentityDef(
        "stanton-rr", NUMERIC, (),
        P("SUM_{k<inf}{(-q;q^2)_k q^{k*(k+2)} // (q^4;q^4)_k}"),
        P("(-q;q^2)_inf [q^6,q,q^5;q^6]_inf // (q^2;q^2)_inf"),
        ("q",), "Rogers-Ramanujan type identity of Stanton"))
    out.append(IdentityDef(
        "cor-qq2f1", NUMERIC, (),
        P("SUM_{k<inf}{(-1)^k (1-q^{5k}a) [b,q^{3/2}a/b;q^2]_k (a;q^3)_k (q^{1/2};q)_k (q^{3/2}a;q^6)_k"
          " q^{(k*k+2k)/2}"
          " // (1-a) (q^2;q^2)_k [q^3a/b,q^{3/2}b;q^3]_k (q^{3/2}a;q^2)_{2k}}"),
        P("{[b,q^{3/2}a/b;q^2]_inf // [q^2,q^{3/2}a;q^2]_inf}"
          " {[q^3a,q^{3/2};q^3]_inf // [q^3a/b,q^{3/2}b;q^3]_inf}"
          " {[q^6,q^{3/2}a;q^6]_inf // [b,q^{3/2}a/b;q^6]_inf}"),
        ("q", "a", "b"), "Corollary: nonterminating series identity (second)",
        domain={"a": _POS, "b": _POS}))
    return out


def _v_side(P) -> list:
    out = []
    out.append(IdentityDef(
        "cor-v2-new", EXACT, ("m",),
        P("SUM_{k<m+1}{(1-q^{5k}a) (q^{-3-6m};q^2)_k [a,q^{-3m};q^3]_k (q^{2+3m}a;q^2)_{2k}"
          " (-1)^k q^{(2+3m)k-C(k,2)}"
          " // (1-a) [q^2,q^{2+3m}a;q^2]_k (q^{6+6m}a;q^3)_k (q^{-1-3m};q)_k (q^{3-3m}a;q^6)_k}"),
        P("{[q^{6+3m}a,q^{-3m}/a;q^3]_m // [q^2,q^4;q^3]_m} {[q^5,q^7;q^6]_m // [q^{9+3m}a,q^{3-3m}/a;q^6]_m}"),
        ("q", "a"), "Corollary: terminating identity following the quadratic V theorem"))
    even = P("{(q^2a;q^2)_{3n/2} // (q^{3/2}a^{1/2};q^2)_{3n/2}} {(q^3;q^6)_{n/2} // (q^{9/2}a^{3/2};q^6)_{n/2}}")
    out.append(IdentityDef(
        "cor-chu-48d", EXACT, ("n",),
        P("SUM_{k<n+1}{(1-q^{5k}a) (a;q^2)_k (q^{1/2}a^{1/2};q^2)_{2k} (-q^{1/2}a^{-1/2})^k"
          " [q^{3/2+3n}a^{3/2},q^{-3n};q^3]_k q^{-C(k,2)}"
          " // (1-a) [q^{2+3n}a,q^{1/2-3n}/a^{1/2};q^2]_k (q^{1/2}a^{1/2};q)_k (q^{9/2}a^{3/2};q^6)_k (q^3;q^3)_k}"),
        Parity("n", even, Const(0)),
        ("q", "a"), "Corollary: Chu equation (4.8d), zero for odd n",
        notes="even-branch q^2 denominator read as q^{3/2}a^{1/2}"))
    out.append(IdentityDef(
        "cor-chu-wang-40", EXACT, ("m",),
        P("SUM_{k<m+1}{(1-q^{5k-1-4m}) (q^{-1-4m};q^2)_k (q^{-2m};q^2)_{2k} (-q^{1+2m})^k"
          " [qc,q^{-1-6m}/c;q^3]_k q^{-C(k,2)}"
          " // (1-q^{-1-4m}) [q^{-4m}/c,q^{2+2m}c;q^2]_k (q^{-2m};q)_k (q^{3-6m};q^6)_k (q^3;q^3)_k}"),
        P("{(q^4c;q^6)_m // (q^3;q^6)_m} {(q;q^2)_{2m} // (q^2c;q^2)_{2m}} {(q^2c;q^2)_m // (q;q^2)_m}"),
        ("q", "c"), "Corollary: Chu-Wang Corollary 40",
        notes="q^3-numerator argument read as q^{-1-6m}/c"))
    out.append(IdentityDef(
        "cor-nuova", EXACT, ("m",),
        P("SUM_{k<m+1}{(1-q^{5k}a) (q^3/a^2;q^2)_k [q^{3+3m},q^{-3m};q^3]_k (a^2/q;q^2)_{2k}"
          " (-a)^k q^{-C(1+k,2)}"
          " // (1-a) [q^{2+3m}a,q^{-1-3m}a;q^2]_k (a^3;q^3)_k (q^2/a;q)_k (q^6;q^6)_k}"),
        P("[a/q,qa;q]_m (q^{-3m}/a;q^2)_m (q^{-3m}a^3;q^6)_m"
          " // (q^{-1-3m}a;q^2)_{2m} (a^3;q^3)_m (1/a;q^{-1})_m"),
        ("q", "a"), "Corollary: terminating series identity (quartic V)"))
    return out


def _elliptic(P) -> list:
    out = []
    even = P("[q^2a;q^2,p]_{m/2} [q^3;q^6,p]_{m/2} // [q^{1+m};q^2,p]_{m/2} [q^{4-m}a;q^6,p]_{m/2}")
    out.append(IdentityDef(
        "ell-1", ELLIPTIC, ("m",),
        P("SUM_{k<m+1}{<q^{5k}a> [a,q^{2+m};q^2,p]_k [q^{-m};q,p]_k [q^{1-m}a;q^6,p]_k"
          " [q^{1+2m}a;q^3,p]_k (-1)^k q^{C(1+k,2)-m*k}"
          " // <a> [q^{1-2m};q^2,p]_k [q^{2+m}a;q^2,p]_{2k} [q^3,q^{1-m}a;q^3,p]_k}"),
        Parity("m", even, Const(0)),
        ("q", "a"), "Terminating elliptic identity (first), indicator chi(m even)",
        domain={"a": _POS}))
    out.append(IdentityDef(
        "ell-2", ELLIPTIC, ("m",),
        P("SUM_{k<m+1}{<q^{5k}a> [a,q^{-2m};q^2,p]_k [q^{2+2m};q,p]_k [q^{3+2m}a;q^6,p]_k"
          " q^{C(k,2)+(3+2m)k} (-1)^k [q^{-3-4m}a;q^3,p]_k"
          " // <a> [q^{5+4m};q^2,p]_k [q^{-2m}a;q^2,p]_{2k} [q^3,q^{3+2m}a;q^3,p]_k}"),
        P("[q^2a;q^2,p]_m [q^5;q^2,p]_{2m} [q^{-4m}a;q^6,p]_m"
          " // [q^3;q^2,p]_m [q^{-2m}a;q^2,p]_{2m} [q^9;q^6,p]_m"),
        ("q", "a"), "Terminating elliptic identity (second)", domain={"a": _POS}))
    out.append(IdentityDef(
        "ell-3", ELLIPTIC, ("m",),
        P("SUM_{k<m+1}{<q^{5k}a> [q^3/a^2;q^2,p]_k [a^2/q;q^2,p]_{2k} (-a)^k q^{-C(1+k,2)}"
          " [q^{3+3m},q^{-3m};q^3,p]_k"
          " // <a> [q^{2+3m}a,q^{-1-3m}a;q^2,p]_k [q^2/a;q,p]_k [q^6;q^6,p]_k [a^3;q^3,p]_k}"),
        P("[a/q,qa;q,p]_m [q^{-3m}/a;q^2,p]_m [q^{-3m}a^3;q^6,p]_m"
          " // [q^{-1-3m}a;q^2,p]_{2m} [a^3;q^3,p]_m [1/a;q^{-1},p]_m"),
        ("q", "a"), "Terminating elliptic identity (third), deforms cor-nuova",
        domain={"a": _POS}))
    return out


def _registry() -> dict:
    P = parser()
    entries = _theorems(P) + _u_side(P) + _v_side(P) + _recurrences(P) + _elliptic(P)
    out = {}
    for e in entries:
        if e.id in out:
            raise ValueError(f"duplicate identity id {e.id}")
        out[e.id] = e
    return out


_REGISTRY = _registry()
IDENTITY_IDS = tuple(_REGISTRY)


def registry() -> list:
    return list(_REGISTRY.values())


def identity(id_: str) -> IdentityDef:
    try:
        return _REGISTRY[id_]
    except KeyError:
        raise UnknownIdentity(id_) from None
