"""The six (A_k, B_k) difference pairs with their closed forms.

Each pair lives in its own notation namespace holding

``A``, ``B``           the two sequences (index ``k``),
``NA``, ``DB``         closed forms of the backward / forward differences,
``W``                  closed form of varpi = A_{-1} B_0,
``R``                  closed form of A_{n-1} B_n / varpi,
``X``, ``Z``           one-step recurrence  S_n(a) = X(a) S_n(sigma a) + Z(a),
``C``, ``Y``           m-step iteration     S_n(a) = C(a) S_n(sigma^m a) + Y(a),

plus the prefactor ``P`` in ``S_n P = sum B_k NA_k``, the shifted sum ``Q``
claimed for ``-sum A_k DB_k``, and the separated forms of
``R(sigma^k a)``.  Here ``S`` is the quartic series the pair acts on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .expr import Expr, Function
from .notation import Parser
from .series import series_function

SERIES_ALIASES = {
    "U": "U",
    "V": "V",
    "Ud": "U_diamond",
    "Ut": "U_triangle",
    "Us": "U_star",
    "Vd": "V_diamond",
    "Vt": "V_triangle",
    "Vs": "V_star",
}


def base_parser() -> Parser:
    fns = {}
    for alias, name in SERIES_ALIASES.items():
        fn = series_function(name)
        fns[alias] = Function(alias, fn.params, fn.body, fn.count_var)
    return Parser(fns)


@dataclass(frozen=True)
class AbelPair:
    name: str
    series: str
    params: tuple
    sigma: tuple            # one step of the parameter shift, in terms of j
    fns: dict               # name -> Function (A, B, NA, DB, W, R, X, Z, C, Y)
    prefactor: Expr         # S_n P = sum B NA
    shifted: Expr           # -sum A DB
    r_shift: tuple          # arguments of R(sigma^k a), in terms of k
    r_split: tuple          # separated forms of R(sigma^k a)
    recurrence: Expr        # right-hand side of the one-step recurrence
    iteration: Expr         # right-hand side of the m-step iteration
    notes: dict = field(default_factory=dict)

    def __getitem__(self, key) -> Function:
        return self.fns[key]


def _build(name, series, params, sigma, defs, prefactor, shifted, r_shift, r_split,
           notes=None) -> AbelPair:
    P = base_parser()
    for key in ("A", "B", "NA", "DB", "W", "R", "X", "Z", "C", "Y"):
        P.define(key, params, defs[key])
    S = series
    sig1 = ",".join(s.replace("j", "(1)") for s in sigma)
    rec = P(f"{S}_n({sig1}) X({','.join(params)}) + Z({','.join(params)})")
    sigm = ",".join(s.replace("j", "(m)") for s in sigma)
    it = P(f"{S}_n({sigm}) C({','.join(params)}) + Y({','.join(params)})")
    return AbelPair(
        name, series, tuple(params), tuple(sigma),
        {k: P.functions[k] for k in ("A", "B", "NA", "DB", "W", "R", "X", "Z", "C", "Y")},
        P(prefactor), P(shifted), tuple(r_shift), tuple(P(t) for t in r_split), rec, it,
        notes or {},
    )


# ---------------------------------------------------------------------------
# U side
# ---------------------------------------------------------------------------

U_QUAD = dict(
    A="[q^3a/bd,q^5a/bd;q]_k (b^3d^3/q^7a^2;q^2)_k (q^9a^2/bd;q^6)_k"
      " // [bd,q^2bd;q^4]_k (q^12a^3/b^3d^3;q^3)_k (bd/q^4a;q^{-1})_k",
    B="[b,d;q^2]_k [b^2d^2/q^6a,q^12a^3/b^3d^3;q^3]_k"
      " // [q^3a/b,q^3a/d;q^3]_k [q^9a^2/b^2d^2,b^3d^3/q^9a^2;q^2]_k",
    W="a (1-q^2/bd) (1-q^4/bd) (1-q^3a/bd) (1-q^9a^3/b^3d^3)"
      " // (1-q^2a/bd) (1-q^4a/bd) (1-q^3a^2/bd) (1-q^9a^2/b^3d^3)",
    R="(1-q^{9+3n}a^3/b^3d^3) [b,d;q^2]_n [q^2a/bd,q^4a/bd;q]_n (b^2d^2/q^6a;q^3)_n (q^3a^2/bd;q^6)_n"
      " // (1-q^9a^3/b^3d^3) (q^9a^2/b^2d^2;q^2)_n (bd/q^4;q^2)_{2n} [q^3a/b,q^3a/d;q^3]_n (bd/q^3a;q^{-1})_n",
    NA="(1-q^{5k}a) (1-q^{6-3k}a/b^2d^2) (1-q^{2k+5}a^2/b^2d^2) (1-q^{2k+7}a^2/b^2d^2)"
       " [q^2a/bd,q^4a/bd;q]_k (b^3d^3/q^9a^2;q^2)_k (q^3a^2/bd;q^6)_k q^{2k}"
       " // (1-q^2a/bd) (1-q^4a/bd) (1-q^3a^2/bd) (1-q^9a^2/b^3d^3)"
       " [bd,q^2bd;q^4]_k (q^12a^3/b^3d^3;q^3)_k (bd/q^4a;q^{-1})_k",
    DB="-1 (1-q^{3+5k}a) (1-q^{3+k}a/bd) (1-q^9a^2/b^2d^3) (1-q^9a^2/b^3d^2)"
       " [b,d;q^2]_k [b^2d^2/q^6a,q^12a^3/b^3d^3;q^3]_k q^{2k}"
       " // (1-q^3a/b) (1-q^3a/d) (1-q^9a^2/b^2d^2) (1-q^9a^2/b^3d^3)"
       " [q^11a^2/b^2d^2,b^3d^3/q^7a^2;q^2]_k [q^6a/b,q^6a/d;q^3]_k",
    X="(q^2a/bd;q)_3 (1-q^3a^2/bd) (1-q^9a^2/b^2d^3) (1-q^9a^2/b^3d^2)"
      " // (q^5a^2/b^2d^2;q^2)_3 (1-q^3a/b) (1-q^3a/d) (1-q^6a/b^2d^2)",
    Z="-a {1 - R(a,b,d)} (1-q^2/bd) (1-q^4/bd) (1-q^3a/bd) (1-q^9a^3/b^3d^3)"
      " // (1-q^5a^2/b^2d^2) (1-q^7a^2/b^2d^2) (1-q^6a/b^2d^2)",
    C="(q^2a/bd;q)_{3m} [q^3a^2/bd,q^9a^2/b^2d^3,q^9a^2/b^3d^2;q^6]_m"
      " // (q^5a^2/b^2d^2;q^2)_{3m} [q^3a/b,q^3a/d,q^6a/b^2d^2;q^3]_m",
    Y="-1 {a (1-q^2/bd) (1-q^4/bd) (1-q^3a/bd) // (1-q^5a^2/b^2d^2) (1-q^7a^2/b^2d^2) (1-q^6a/b^2d^2)}"
      " SUM_{k<m}{(1-q^{9+9k}a^3/b^3d^3) [q^2a/bd,q^4a/bd,q^6a/bd;q^3]_k q^{3k}"
      " {1 - R(q^{3k}a,b,d)} [q^3a^2/bd,q^9a^2/b^2d^3,q^9a^2/b^3d^2;q^6]_k"
      " // [q^3a/b,q^3a/d,q^9a/b^2d^2;q^3]_k [q^9a^2/b^2d^2,q^11a^2/b^2d^2,q^13a^2/b^2d^2;q^6]_k}",
)

U_QUAD_PREFACTOR = (
    "(1-q^5a^2/b^2d^2) (1-q^7a^2/b^2d^2) (1-q^6a/b^2d^2)"
    " // (1-q^2a/bd) (1-q^4a/bd) (1-q^3a^2/bd) (1-q^9a^2/b^3d^3)"
)
U_QUAD_SHIFTED = (
    "U_n(q^3a,b,d) (1-q^3a/bd) (1-q^9a^2/b^2d^3) (1-q^9a^2/b^3d^2)"
    " // (1-q^3a/b) (1-q^3a/d) (1-q^9a^2/b^2d^2) (1-q^9a^2/b^3d^3)"
)
U_QUAD_SPLIT = (
    # k-shifted parameters written out
    "(1-q^{9+3n+9k}a^3/b^3d^3) [b,d;q^2]_n [q^{2+3k}a/bd,q^{4+3k}a/bd;q]_n"
    " (q^{-6-3k}b^2d^2/a;q^3)_n (q^{3+6k}a^2/bd;q^6)_n"
    " // (1-q^{9+9k}a^3/b^3d^3) (q^{9+6k}a^2/b^2d^2;q^2)_n (bd/q^4;q^2)_{2n}"
    " [q^{3+3k}a/b,q^{3+3k}a/d;q^3]_n (q^{-3-3k}bd/a;q^{-1})_n",
    # k and n factorials separated
    "{[q^2a/bd,q^4a/bd;q]_n [b,d;q^2]_n (b^2d^2/q^6a;q^3)_n (q^3a^2/bd;q^6)_n"
    " // (bd/q^4;q^2)_{2n} (q^9a^2/b^2d^2;q^2)_n [q^3a/b,q^3a/d;q^3]_n (bd/q^3a;q^{-1})_n}"
    " {(1-q^{9+3n+9k}a^3/b^3d^3) [q^3a/b,q^3a/d,q^9a/b^2d^2;q^3]_k (q^{3+6n}a^2/bd;q^6)_k"
    " (q^9a^2/b^2d^2;q^2)_{3k} [q^{2+n}a/bd,q^{4+n}a/bd,q^{6+n}a/bd;q^3]_k"
    " // (1-q^{9+9k}a^3/b^3d^3) [q^2a/bd,q^4a/bd,q^6a/bd;q^3]_k (q^3a^2/bd;q^6)_k"
    " (q^{9+2n}a^2/b^2d^2;q^2)_{3k} [q^{3+3n}a/b,q^{3+3n}a/d,q^{9-3n}a/b^2d^2;q^3]_k}",
)


U_CUBIC = dict(
    A="[q^3a/bd,bd^2/q^4a;q]_k (q^2b;q^2)_k (q^9a^2/bd;q^6)_k"
      " // [q^2bd,q^9a^2/bd^2;q^4]_k (q^3a/b;q^3)_k (bd/q^4a;q^{-1})_k",
    B="(q^4a/bd;q)_k (d/q^2;q^2)_k (b^2d^2/q^3a;q^3)_k (q^9a^2/bd^2;q^4)_k"
      " // (bd;q^4)_k (q^6a/d;q^3)_k (q^7a^2/b^2d^2;q^2)_k (bd^2/q^5a;q)_k",
    W="(1-bd/q^2) (1-q^5a^2/bd^2) (1-a/b) (1-bd/q^3a)"
      " // (1-q^2a/bd) (1-bd^2/q^5a) (1-b) (1-q^3a^2/bd)",
    R="(1-q^{5+4n}a^2/bd^2) [b,d/q^2;q^2]_n [q^2a/bd,q^4a/bd;q]_n (b^2d^2/q^3a;q^3)_n (q^3a^2/bd;q^6)_n"
      " // (1-q^5a^2/bd^2) (q^7a^2/b^2d^2;q^2)_n (bd/q^2;q^2)_{2n} [a/b,q^6a/d;q^3]_n (bd/q^3a;q^{-1})_n",
    NA="(1-q^{5k}a) (1-q^{2-2k}/d) (1-q^{5+2k}a^2/b^2d^2) (1-q^{3+3k}a/d)"
       " [q^2a/bd,bd^2/q^5a;q]_k (b;q^2)_k (q^3a^2/bd;q^6)_k q^k"
       " // (1-q^2a/bd) (1-q^5a/bd^2) (1-b) (1-q^3a^2/bd)"
       " [q^2bd,q^9a^2/bd^2;q^4]_k (q^3a/b;q^3)_k (bd/q^4a;q^{-1})_k",
    DB="-1 (1-q^{4+5k}a) (1-q^{3+k}a/bd) (1-q^{2+2k}b) (1-q^9a^2/b^2d^3)"
       " (q^4a/bd;q)_k (d/q^2;q^2)_k (b^2d^2/q^3a;q^3)_k (q^9a^2/bd^2;q^4)_k q^k"
       " // (1-q^5a/bd^2) (1-q^7a^2/b^2d^2) (1-q^6a/d) (1-bd)"
       " (bd^2/q^4a;q)_k (q^9a^2/b^2d^2;q^2)_k (q^9a/d;q^3)_k (q^4bd;q^4)_k",
    X="(b;q^2)_2 (q^2a/bd;q)_2 (1-q^3a^2/bd) (1-q^9a^2/b^2d^3)"
      " // (q^5a^2/b^2d^2;q^2)_2 (q^3a/d;q^3)_2 (1-q^2/d) (1-bd)",
    Z="{1 - R(a,b,d)} (1-bd/q^2) (1-q^5a^2/bd^2) (1-a/b) (1-q^3a/bd)"
      " // (1-d/q^2) (1-q^3a/d) (1-q^5a^2/b^2d^2)",
    C="(b;q^2)_{2m} (q^2a/bd;q)_{2m} [q^3a^2/bd,q^9a^2/b^2d^3;q^6]_m"
      " // (q^5a^2/b^2d^2;q^2)_{2m} (q^3a/d;q^3)_{2m} [q^2/d,bd;q^2]_m",
    Y="{(1-bd/q^2) (1-q^3a/bd) (1-a/b) // (1-d/q^2) (1-q^3a/d) (1-q^5a^2/b^2d^2)}"
      " SUM_{k<m}{(1-q^{5+8k}a^2/bd^2) (b;q^2)_{2k} {1 - R(q^{4k}a,q^{4k}b,q^{-2k}d)}"
      " [q^2a/bd,q^5a/bd;q^2]_k [q^3a^2/bd,q^9a^2/b^2d^3;q^6]_k q^{2k}"
      " // (q^7a^2/b^2d^2;q^2)_{2k} [q^4/d,bd/q^2;q^2]_k [q^6a/d,q^9a/d;q^6]_k}",
)
U_CUBIC_PREFACTOR = (
    "(1-q^2/d) (1-q^3a/d) (1-q^5a^2/b^2d^2) // (1-q^2a/bd) (1-q^5a/bd^2) (1-b) (1-q^3a^2/bd)"
)
U_CUBIC_SHIFTED = (
    "U_n(q^4a,q^4b,d/q^2) (1-q^2b) (1-q^3a/bd) (1-q^9a^2/b^2d^3)"
    " // (1-bd) (1-q^6a/d) (1-q^5a/bd^2) (1-q^7a^2/b^2d^2)"
)
U_CUBIC_SPLIT = (
    "(1-q^{5+4n+8k}a^2/bd^2) [q^{4k}b,q^{-2-2k}d;q^2]_n [q^{2+2k}a/bd,q^{4+2k}a/bd;q]_n"
    " (b^2d^2/q^3a;q^3)_n (q^{3+6k}a^2/bd;q^6)_n"
    " // (1-q^{5+8k}a^2/bd^2) (q^{7+4k}a^2/b^2d^2;q^2)_n (q^{2k-2}bd;q^2)_{2n}"
    " [a/b,q^{6+6k}a/d;q^3]_n (q^{-3-2k}bd/a;q^{-1})_n",
    "{[q^2a/bd,q^4a/bd;q]_n [b,d/q^2;q^2]_n (b^2d^2/q^3a;q^3)_n (q^3a^2/bd;q^6)_n"
    " // (bd/q^2;q^2)_{2n} (q^7a^2/b^2d^2;q^2)_n [a/b,q^6a/d;q^3]_n (bd/q^3a;q^{-1})_n}"
    " {(1-q^{5+4n+8k}a^2/bd^2) [q^{2+n}a/bd,q^{5+n}a/bd,q^4/d,q^{-2}bd;q^2]_k (q^6a/d;q^3)_{2k}"
    " [q^{2n}b,q^7a^2/b^2d^2;q^2]_{2k} (q^{3+6n}a^2/bd;q^6)_k"
    " // (1-q^{5+8k}a^2/bd^2) [q^2a/bd,q^5a/bd,q^{4-2n}/d,q^{4n-2}bd;q^2]_k (q^{6+3n}a/d;q^3)_{2k}"
    " [b,q^{7+2n}a^2/b^2d^2;q^2]_{2k} (q^3a^2/bd;q^6)_k}",
)

U_QUARTIC = dict(
    A="(q^3a/bd;q)_k (q^2b;q^2)_k (b^2d^2/a;q^3)_k (q^5a^2/b^2d;q^4)_k"
      " // (q^2bd;q^4)_k (q^3a/b;q^3)_k (q^5a^2/b^2d^2;q^2)_k (b^2d/a;q)_k",
    B="[qa/bd,b^2d/a;q]_k (d/q^2;q^2)_k (q^3a^2/bd;q^6)_k"
      " // [bd,qa^2/b^2d;q^4]_k (q^3a/d;q^3)_k (bd/q^2a;q^{-1})_k",
    W="(1-b^2d/qa) (1-b^2d^2/q^3a^2) (1-b/a) (1-bd/q^2)"
      " // (1-bd/q^2a) (1-b) (1-b^2d^2/q^3a) (1-b^2d/qa^2)",
    R="(1-q^{n-1}b^2d/a) [b,d/q^2;q^2]_n [qa/bd,q^2a/bd;q]_n (b^2d^2/q^3a;q^3)_n (q^3a^2/bd;q^6)_n"
      " // (1-q^{-1}b^2d/a) (q^3a^2/b^2d^2;q^2)_n (bd/q^2;q^2)_{2n} [a/b,q^3a/d;q^3]_n (bd/q^2a;q^{-1})_n",
    NA="(1-q^{5k}a) (1-q^{2-2k}/d) (1-q^{1+k}a/bd) (1-q^3a^2/b^3d^2)"
       " (q^2a/bd;q)_k (b;q^2)_k (b^2d^2/q^3a;q^3)_k (qa^2/b^2d;q^4)_k q^{3k}"
       " // (1-b) (1-q^2a/bd) (1-qa^2/b^2d) (1-q^3a/b^2d^2)"
       " (b^2d/a;q)_k (q^5a^2/b^2d^2;q^2)_k (q^3a/b;q^3)_k (q^2bd;q^4)_k",
    DB="-1 (1-q^{1+5k}a) (1-q^{3k}a/b) (1-q^{2+2k}b) (1-q^{3+2k}a^2/b^2d^2)"
       " [qa/bd,b^2d/a;q]_k (d/q^2;q^2)_k (q^3a^2/bd;q^6)_k q^{-k}"
       " // (1-bd) (1-qa^2/b^2d) (1-q^3a/d) (1-q^2a/bd)"
       " [q^4bd,q^5a^2/b^2d;q^4]_k (q^6a/d;q^3)_k (bd/q^3a;q^{-1})_k",
    X="-1 q^2a/bd (b;q^2)_2 (1-b^2d^2/q^3a) (1-b^2d^2/q^3a^2) (1-b/a)"
      " // (1-bd) (1-q^2/d) (1-bd/qa) (1-q^3a/d) (1-b^3d^2/q^3a^2)",
    Z="{1 - R(a,b,d)} (1-a/b) (1-bd/q^2) (1-b^2d/qa) (1-b^2d^2/q^3a^2)"
      " // (1-d/q^2) (1-bd/qa) (1-b^3d^2/q^3a^2)",
    C="(b^2d^2/q^3a^2;q^2)_m (b;q^2)_{2m} [b/a,b^2d^2/q^3a;q^3]_m (q^2a/bd;q^{-1})_m"
      " // [q^2/d,bd;q^2]_m [bd/qa,bd/q^2a;q]_m (q^3a/d;q^3)_m (b^3d^2/q^3a^2;q^6)_m",
    Y="{(1-a/b) (1-bd/q^2) (1-b^2d^2/q^3a^2) // (1-d/q^2) (1-bd/qa) (1-b^3d^2/q^3a^2)}"
      " SUM_{k<m}{(1-q^{5k-1}b^2d/a) (b^2d^2/qa^2;q^2)_k {1 - R(q^ka,q^{4k}b,q^{-2k}d)}"
      " (b;q^2)_{2k} [q^3b/a,b^2d^2/q^3a;q^3]_k (-qa/bd)^k q^{-C(k,2)}"
      " // [q^4/d,bd/q^2;q^2]_k (bd/a;q)_k (q^3a/d;q^3)_k (q^3b^3d^2/a^2;q^6)_k}",
)
U_QUARTIC_PREFACTOR = (
    "(1-q^2/d) (1-qa/bd) (1-q^3a^2/b^3d^2) // (1-b) (1-q^2a/bd) (1-qa^2/b^2d) (1-q^3a/b^2d^2)"
)
U_QUARTIC_SHIFTED = (
    "U_n(qa,q^4b,d/q^2) (1-b/a) (1-q^2b) (1-b^2d^2/q^3a^2)"
    " // (1-bd) (1-b^2d/qa^2) (1-q^3a/d) (1-bd/q^2a)"
)
U_QUARTIC_SPLIT = (
    "(1-q^{n+5k-1}b^2d/a) [q^{4k}b,q^{-2-2k}d;q^2]_n [q^{1-k}a/bd,q^{2-k}a/bd;q]_n"
    " (q^{3k-3}b^2d^2/a;q^3)_n (q^3a^2/bd;q^6)_n"
    " // (1-q^{5k-1}b^2d/a) (q^{3-2k}a^2/b^2d^2;q^2)_n (q^{2k-2}bd;q^2)_{2n}"
    " [q^{-3k}a/b,q^{3+3k}a/d;q^3]_n (q^{k-2}bd/a;q^{-1})_n",
    "{[qa/bd,q^2a/bd;q]_n [b,d/q^2;q^2]_n (b^2d^2/q^3a;q^3)_n (q^3a^2/bd;q^6)_n"
    " // (bd/q^2;q^2)_{2n} (q^3a^2/b^2d^2;q^2)_n [a/b,q^3a/d;q^3]_n (bd/q^2a;q^{-1})_n}"
    " {(1-q^{n+5k-1}b^2d/a) [q^{3n-3}b^2d^2/a,q^{3-3n}b/a,q^3a/d;q^3]_k q^{n*k}"
    " (bd/a;q)_k (q^{2n}b;q^2)_{2k} [q^4/d,bd/q^2,q^{-1-2n}b^2d^2/a^2;q^2]_k"
    " // (1-q^{5k-1}b^2d/a) [b^2d^2/q^3a,q^3b/a,q^{3+3n}a/d;q^3]_k (q^{-n}bd/a;q)_k"
    " (b;q^2)_{2k} [q^{4-2n}/d,q^{4n-2}bd,b^2d^2/qa^2;q^2]_k}",
)

# ---------------------------------------------------------------------------
# V side
# ---------------------------------------------------------------------------

V_QUAD = dict(
    A="[q^3c^2e^2/a^2,a^4/qc^3e^3;q^2]_k [q^4c,q^4e;q^3]_k"
      " // [q^2a^3/c^2e^2,q^6c^3e^3/a^3;q^3]_k [qa/c,qa/e;q^2]_k",
    B="(q^6c^3e^3/a^3;q^3)_k (a^2/ce;q^2)_{2k} (a/q^2ce;q^{-1})_k"
      " // (a^4/q^3c^3e^3;q^2)_k [qce/a,q^3ce/a;q]_k (q^5ce;q^6)_k",
    W="(1-a/qc) (1-a/qe) (1-a^3/qc^2e^2) (1-q^3c^3e^3/a^3)"
      " // (1-qc) (1-qe) (1-qc^2e^2/a^2) (1-a^4/q^3c^3e^3)",
    R="(1-q^{3+3n}c^3e^3/a^3) (qc^2e^2/a^2;q^2)_n (a^2/ce;q^2)_{2n} [qc,qe;q^3]_n (a/q^2ce;q^{-1})_n"
      " // (1-q^3c^3e^3/a^3) [a/qc,a/qe;q^2]_n [qce/a,q^3ce/a;q]_n (a^3/qc^2e^2;q^3)_n (q^5ce;q^6)_n",
    NA="(1-q^{5k}a) (1-q^{2+k}ce/a) (1-q^2c^2e^3/a^3) (1-q^2c^3e^2/a^3)"
       " [qc^2e^2/a^2,a^4/q^3c^3e^3;q^2]_k [qc,qe;q^3]_k q^{2k}"
       " // (1-qc) (1-qe) (1-qc^2e^2/a^2) (1-q^3c^3e^3/a^4)"
       " [qa/c,qa/e;q^2]_k [q^2a^3/c^2e^2,q^6c^3e^3/a^3;q^3]_k",
    DB="-1 (1-q^{3+5k}a) (1-q^{1-3k}c^2e^2/a^3) (1-q^{3+2k}c^2e^2/a^2) (1-q^{5+2k}c^2e^2/a^2)"
       " (q^6c^3e^3/a^3;q^3)_k (a^2/ce;q^2)_{2k} (a/q^2ce;q^{-1})_k q^{2k}"
       " // (1-q^3c^3e^3/a^4) (1-qce/a) (1-q^3ce/a) (1-q^5ce)"
       " (a^4/qc^3e^3;q^2)_k [q^2ce/a,q^4ce/a;q]_k (q^11ce;q^6)_k",
    X="(1-qc) (1-qe) (1-qc^2e^2/a^3) (qc^2e^2/a^2;q^2)_3"
      " // (1-q^5ce) (1-q^2c^2e^3/a^3) (1-q^2c^3e^2/a^3) (qce/a;q)_3",
    Z="-1 {1 - R(a,c,e)} a (1-qc/a) (1-qe/a) (1-qc^2e^2/a^3) (1-q^3c^3e^3/a^3)"
      " // (1-q^2ce/a) (1-q^2c^3e^2/a^3) (1-q^2c^2e^3/a^3)",
    C="[qc,qe,qc^2e^2/a^3;q^3]_m (qc^2e^2/a^2;q^2)_{3m}"
      " // [q^5ce,q^2c^2e^3/a^3,q^2c^3e^2/a^3;q^6]_m (qce/a;q)_{3m}",
    Y="-1 {a (1-qc/a) (1-qe/a) (1-qc^2e^2/a^3) // (1-q^2ce/a) (1-q^2c^2e^3/a^3) (1-q^2c^3e^2/a^3)}"
      " SUM_{k<m}{(1-q^{3+9k}c^3e^3/a^3) [qc,qe,q^4c^2e^2/a^3;q^3]_k q^{3k}"
      " {1 - R(q^{3k}a,q^{3k}c,q^{3k}e)} [qc^2e^2/a^2,q^3c^2e^2/a^2,q^5c^2e^2/a^2;q^6]_k"
      " // [qce/a,q^3ce/a,q^5ce/a;q^3]_k [q^5ce,q^8c^2e^3/a^3,q^8c^3e^2/a^3;q^6]_k}",
)
V_QUAD_PREFACTOR = (
    "(1-q^2ce/a) (1-q^2c^2e^3/a^3) (1-q^2c^3e^2/a^3) // (1-qc) (1-qe) (1-qc^2e^2/a^2) (1-q^3c^3e^3/a^4)"
)
V_QUAD_SHIFTED = (
    "V_n(q^3a,q^3c,q^3e) (1-qc^2e^2/a^3) (1-q^3c^2e^2/a^2) (1-q^5c^2e^2/a^2)"
    " // (1-q^3c^3e^3/a^4) (1-qce/a) (1-q^3ce/a) (1-q^5ce)"
)
V_QUAD_SPLIT = (
    "(1-q^{3+3n+9k}c^3e^3/a^3) (q^{1+6k}c^2e^2/a^2;q^2)_n (a^2/ce;q^2)_{2n}"
    " [q^{1+3k}c,q^{1+3k}e;q^3]_n (q^{-2-3k}a/ce;q^{-1})_n"
    " // (1-q^{3+9k}c^3e^3/a^3) [a/qc,a/qe;q^2]_n [q^{1+3k}ce/a,q^{3+3k}ce/a;q]_n"
    " (q^{-1-3k}a^3/c^2e^2;q^3)_n (q^{5+6k}ce;q^6)_n",
    "{(a^2/ce;q^2)_{2n} (qc^2e^2/a^2;q^2)_n [qc,qe;q^3]_n (a/q^2ce;q^{-1})_n"
    " // [qce/a,q^3ce/a;q]_n [a/qc,a/qe;q^2]_n (a^3/qc^2e^2;q^3)_n (q^5ce;q^6)_n}"
    " {(1-q^{3+3n+9k}c^3e^3/a^3) (q^{1+2n}c^2e^2/a^2;q^2)_{3k} (q^5ce;q^6)_k"
    " [q^{1+3n}c,q^{1+3n}e,qce/a,q^3ce/a,q^5ce/a,q^{4-3n}c^2e^2/a^3;q^3]_k"
    " // (1-q^{3+9k}c^3e^3/a^3) (qc^2e^2/a^2;q^2)_{3k} (q^{5+6n}ce;q^6)_k"
    " [qc,qe,q^{1+n}ce/a,q^{3+n}ce/a,q^{5+n}ce/a,q^4c^2e^2/a^3;q^3]_k}",
)

V_CUBIC = dict(
    A="(a^2/qc^2e;q)_k (q^3c^2e^2/a^2;q^2)_k (q^4c;q^3)_k (q^4a^2/ce;q^4)_k"
      " // (q^6c^2e/a;q^4)_k (q^2a^3/c^2e^2;q^3)_k (qa/c;q^2)_k (qce/a;q)_k",
    B="[q^2a^2/ce,q^6c^2e/a;q^4]_k (qe;q^3)_k (a/qce;q^{-1})_k"
      " // [q^2ce/a,a^2/q^2c^2e;q]_k (q^3a/e;q^2)_k (q^5ce;q^6)_k",
    W="(1-ce/a) (1-a/qc) (1-a^3/qc^2e^2) (1-q^2c^2e/a)"
      " // (1-a^2/q^2c^2e) (1-qc^2e^2/a^2) (1-qc) (1-a^2/ce)",
    R="(1-q^{2+4n}c^2e/a) (qc^2e^2/a^2;q^2)_n (a^2/ce;q^2)_{2n} [qc,qe;q^3]_n (a/qce;q^{-1})_n"
      " // (1-q^2c^2e/a) [a/qc,q^3a/e;q^2]_n [ce/a,q^2ce/a;q]_n (a^3/qc^2e^2;q^3)_n (q^5ce;q^6)_n",
    NA="(1-q^{5k}a) (1-q^{1+k}ce/a) (1-q^{1+2k}a/e) (1-q^2c^3e^2/a^3)"
       " (a^2/q^2c^2e;q)_k (qc^2e^2/a^2;q^2)_k (qc;q^3)_k (a^2/ce;q^4)_k q^k"
       " // (1-q^2c^2e/a^2) (1-qc^2e^2/a^2) (1-qc) (1-a^2/ce)"
       " (qce/a;q)_k (qa/c;q^2)_k (q^2a^3/c^2e^2;q^3)_k (q^6c^2e/a;q^4)_k",
    DB="-1 (1-q^{4+5k}a) (1-q^{1-2k}c/a) (1-q^{3+2k}c^2e^2/a^2) (1-q^{4+3k}c)"
       " [q^2a^2/ce,q^6c^2e/a;q^4]_k (qe;q^3)_k (a/qce;q^{-1})_k q^k"
       " // (1-q^2ce/a) (1-q^2c^2e/a^2) (1-q^3a/e) (1-q^5ce)"
       " [q^3ce/a,a^2/qc^2e;q]_k (q^5a/e;q^2)_k (q^11ce;q^6)_k",
    X="(qc;q^3)_2 (qc^2e^2/a^2;q^2)_2 (1-qc/a) (1-a^2/ce)"
      " // (qce/a;q)_2 (qa/e;q^2)_2 (1-q^5ce) (1-q^2c^3e^2/a^3)",
    Z="{1 - R(a,c,e)} (1-ce/a) (1-qc/a) (1-a^3/qc^2e^2) (1-q^2c^2e/a)"
      " // (1-a/qce) (1-qa/e) (1-q^2c^3e^2/a^3)",
    C="(qc;q^3)_{2m} (qc^2e^2/a^2;q^2)_{2m} [qc/a,a^2/ce;q^2]_m"
      " // (qce/a;q)_{2m} (qa/e;q^2)_{2m} [q^5ce,q^2c^3e^2/a^3;q^6]_m",
    Y="{(1-ce/a) (1-qc/a) (1-a^3/qc^2e^2) // (1-a/qce) (1-qa/e) (1-q^2c^3e^2/a^3)}"
      " SUM_{k<m}{(1-q^{2+8k}c^2e/a) (qc;q^3)_{2k} {1 - R(q^{4k}a,q^{6k}c,e)}"
      " [q^3c/a,a^2/ce;q^2]_k (qc^2e^2/a^2;q^2)_{2k} q^{2k}"
      " // [q^5ce,q^8c^3e^2/a^3;q^6]_k [ce/a,q^3ce/a;q^2]_k (q^3a/e;q^2)_{2k}}",
)
V_CUBIC_PREFACTOR = (
    "(1-qce/a) (1-qa/e) (1-q^2c^3e^2/a^3) // (1-q^2c^2e/a^2) (1-qc^2e^2/a^2) (1-qc) (1-a^2/ce)"
)
V_CUBIC_SHIFTED = (
    "V_n(q^4a,q^6c,e) (1-qc/a) (1-q^3c^2e^2/a^2) (1-q^4c)"
    " // (1-q^2ce/a) (1-q^2c^2e/a^2) (1-q^3a/e) (1-q^5ce)"
)
V_CUBIC_SPLIT = (
    "(1-q^{2+4n+8k}c^2e/a) (q^{1+4k}c^2e^2/a^2;q^2)_n (q^{2k}a^2/ce;q^2)_{2n}"
    " [q^{1+6k}c,qe;q^3]_n (q^{-1-2k}a/ce;q^{-1})_n"
    " // (1-q^{2+8k}c^2e/a) [q^{-1-2k}a/c,q^{3+4k}a/e;q^2]_n [q^{2k}ce/a,q^{2+2k}ce/a;q]_n"
    " (a^3/qc^2e^2;q^3)_n (q^{5+6k}ce;q^6)_n",
    "{(a^2/ce;q^2)_{2n} (qc^2e^2/a^2;q^2)_n [qc,qe;q^3]_n (a/qce;q^{-1})_n"
    " // [ce/a,q^2ce/a;q]_n [a/qc,q^3a/e;q^2]_n (a^3/qc^2e^2;q^3)_n (q^5ce;q^6)_n}"
    " {(1-q^{2+4n+8k}c^2e/a) [ce/a,q^3ce/a,q^{4n}a^2/ce,q^{3-2n}c/a;q^2]_k"
    " (q^{1+3n}c;q^3)_{2k} (q^5ce;q^6)_k [q^{1+2n}c^2e^2/a^2,q^3a/e;q^2]_{2k}"
    " // (1-q^{2+8k}c^2e/a) [q^nce/a,q^{n+3}ce/a,a^2/ce,q^3c/a;q^2]_k"
    " (qc;q^3)_{2k} (q^{5+6n}ce;q^6)_k [qc^2e^2/a^2,q^{3+2n}a/e;q^2]_{2k}}",
)

V_QUARTIC = dict(
    A="[q^4a^2/ce,q^2ce^2/a;q^4]_k (q^4c;q^3)_k (a/ce;q^{-1})_k"
      " // [qce/a,q^3a^2/ce^2;q]_k (qa/c;q^2)_k (q^5ce;q^6)_k",
    B="(q^3a^2/ce^2;q)_k (c^2e^2/qa^2;q^2)_k (e/q^2;q^3)_k (q^2a^2/ce;q^4)_k"
      " // (ce^2/q^2a;q^4)_k (q^2a^3/c^2e^2;q^3)_k (q^3a/e;q^2)_k (ce/qa;q)_k",
    W="(1-ce/a) (1-q^2a^2/ce^2) (1-a/qc) (1-ce/q)"
      " // (1-a^2/ce) (1-ce^2/q^2a) (1-qc) (1-qa/ce)",
    R="(1-q^{2+n}a^2/ce^2) (c^2e^2/qa^2;q^2)_n (a^2/ce;q^2)_{2n} [qc,e/q^2;q^3]_n (qa/ce;q^{-1})_n"
      " // (1-q^2a^2/ce^2) [a/qc,q^3a/e;q^2]_n [ce/qa,ce/a;q]_n (q^2a^3/c^2e^2;q^3)_n (ce/q;q^6)_n",
    NA="(1-q^{5k}a) (1-q^{3k-2}e) (1-q^{1+2k}a/e) (1-q^{2k-1}c^2e^2/a^2)"
       " [a^2/ce,ce^2/q^2a;q^4]_k (qc;q^3)_k (qa/ce;q^{-1})_k q^{-k}"
       " // (1-a^2/ce) (1-ce^2/q^2a) (1-qc) (1-ce/qa)"
       " [qce/a,q^3a^2/ce^2;q]_k (qa/c;q^2)_k (q^5ce;q^6)_k",
    DB="-1 (1-q^{1+5k}a) (1-q^kce/a) (1-q^{2k-1}a/c) (1-q^4a^3/c^2e^3)"
       " (q^3a^2/ce^2;q)_k (c^2e^2/qa^2;q^2)_k (e/q^2;q^3)_k (q^2a^2/ce;q^4)_k q^k"
       " // (1-qa/ce) (1-q^3a/e) (1-q^2a^3/c^2e^2) (1-ce^2/q^2a)"
       " (ce/a;q)_k (q^5a/e;q^2)_k (q^5a^3/c^2e^2;q^3)_k (q^2ce^2/a;q^4)_k",
    X="-1 (1-qc) (1-qc/a) (1-a/ce) (1-a^2/ce) (1-q^4a^3/c^2e^3)"
      " // ce/qa (1-q^2a^3/c^2e^2) (1-qa^2/c^2e^2) (1-q^2/e) (qa/e;q^2)_2",
    Z="a (1-a/ce) (1-q^2a^2/ce^2) (1-qc/a) (1-q/ce) {R(a,c,e) - 1}"
      " // (1-qa^2/c^2e^2) (1-q^2/e) (1-qa/e)",
    C="[qc/a,a^2/ce;q^2]_m [a/ce,qa/ce;q]_m (qc;q^3)_m (q^4a^3/c^2e^3;q^6)_m"
      " // (qa^2/c^2e^2;q^2)_m (qa/e;q^2)_{2m} [q^2a^3/c^2e^2,q^2/e;q^3]_m (ce/qa;q^{-1})_m",
    Y="-1 {a (1-a/ce) (1-qc/a) (1-q/ce) // (1-qa^2/c^2e^2) (1-q^2/e) (1-qa/e)}"
      " SUM_{k<m}{(1-q^{2+5k}a^2/ce^2) [q^3c/a,a^2/ce;q^2]_k (qa/ce;q)_k q^{C(k,2)}"
      " {1 - R(q^ka,q^{3k}c,q^{-3k}e)} (qc;q^3)_k (q^4a^3/c^2e^3;q^6)_k (-q^2a/ce)^k"
      " // (q^3a^2/c^2e^2;q^2)_k (q^3a/e;q^2)_{2k} [q^2a^3/c^2e^2,q^5/e;q^3]_k}",
)
V_QUARTIC_PREFACTOR = (
    "(1-e/q^2) (1-qa/e) (1-c^2e^2/qa^2) // (1-a^2/ce) (1-ce^2/q^2a) (1-qc) (1-ce/qa)"
)
V_QUARTIC_SHIFTED = (
    "V_n(qa,q^3c,e/q^3) (1-ce/a) (1-a/qc) (1-q^4a^3/c^2e^3)"
    " // (1-qa/ce) (1-q^3a/e) (1-q^2a^3/c^2e^2) (1-ce^2/q^2a)"
)
V_QUARTIC_SPLIT = (
    "(1-q^{2+n+5k}a^2/ce^2) (q^{-1-2k}c^2e^2/a^2;q^2)_n (q^{2k}a^2/ce;q^2)_{2n}"
    " [q^{1+3k}c,q^{-2-3k}e;q^3]_n (q^{1+k}a/ce;q^{-1})_n"
    " // (1-q^{2+5k}a^2/ce^2) [q^{-1-2k}a/c,q^{3+4k}a/e;q^2]_n [q^{-1-k}ce/a,q^{-k}ce/a;q]_n"
    " (q^{2+3k}a^3/c^2e^2;q^3)_n (ce/q;q^6)_n",
    "{(a^2/ce;q^2)_{2n} (c^2e^2/qa^2;q^2)_n [qc,e/q^2;q^3]_n (qa/ce;q^{-1})_n"
    " // [ce/qa,ce/a;q]_n [a/qc,q^3a/e;q^2]_n (q^2a^3/c^2e^2;q^3)_n (ce/q;q^6)_n}"
    " {(1-q^{2+n+5k}a^2/ce^2) [q^3a^2/c^2e^2,q^{4n}a^2/ce,q^{3-2n}c/a;q^2]_k q^{-n*k}"
    " (q^{1-n}a/ce;q)_k (q^3a/e;q^2)_{2k} [q^{1+3n}c,q^5/e,q^2a^3/c^2e^2;q^3]_k"
    " // (1-q^{5k+2}a^2/ce^2) [q^{3-2n}a^2/c^2e^2,a^2/ce,q^3c/a;q^2]_k (qa/ce;q)_k"
    " (q^{3+2n}a/e;q^2)_{2k} [qc,q^{5-3n}/e,q^{2+3n}a^3/c^2e^2;q^3]_k}",
)


def _pairs() -> dict:
    out = {}
    out["u_quad"] = _build(
        "u_quad", "U", ("a", "b", "d"), ("q^{3j}a", "b", "d"), U_QUAD,
        U_QUAD_PREFACTOR, U_QUAD_SHIFTED, ("q^{3k}a", "b", "d"), U_QUAD_SPLIT)
    out["u_cubic"] = _build(
        "u_cubic", "U", ("a", "b", "d"), ("q^{4j}a", "q^{4j}b", "q^{-2j}d"), U_CUBIC,
        U_CUBIC_PREFACTOR, U_CUBIC_SHIFTED, ("q^{4k}a", "q^{4k}b", "q^{-2k}d"), U_CUBIC_SPLIT)
    out["u_quartic"] = _build(
        "u_quartic", "U", ("a", "b", "d"), ("q^{j}a", "q^{4j}b", "q^{-2j}d"), U_QUARTIC,
        U_QUARTIC_PREFACTOR, U_QUARTIC_SHIFTED, ("q^{k}a", "q^{4k}b", "q^{-2k}d"), U_QUARTIC_SPLIT)
    out["v_quad"] = _build(
        "v_quad", "V", ("a", "c", "e"), ("q^{3j}a", "q^{3j}c", "q^{3j}e"), V_QUAD,
        V_QUAD_PREFACTOR, V_QUAD_SHIFTED, ("q^{3k}a", "q^{3k}c", "q^{3k}e"), V_QUAD_SPLIT)
    out["v_cubic"] = _build(
        "v_cubic", "V", ("a", "c", "e"), ("q^{4j}a", "q^{6j}c", "e"), V_CUBIC,
        V_CUBIC_PREFACTOR, V_CUBIC_SHIFTED, ("q^{4k}a", "q^{6k}c", "e"), V_CUBIC_SPLIT)
    out["v_quartic"] = _build(
        "v_quartic", "V", ("a", "c", "e"), ("q^{j}a", "q^{3j}c", "q^{-3j}e"), V_QUARTIC,
        V_QUARTIC_PREFACTOR, V_QUARTIC_SHIFTED, ("q^{k}a", "q^{3k}c", "q^{-3k}e"), V_QUARTIC_SPLIT)
    return out


PAIRS = _pairs()
PAIR_NAMES = tuple(PAIRS)


def pair(name: str) -> AbelPair:
    return PAIRS[name]
