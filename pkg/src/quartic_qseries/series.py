"""Declarative summand templates and the builtin catalog of named series.

A :class:`SeriesDef` is pure data.  It compiles to an expression tree (see
:mod:`quartic_qseries.expr`) which drives exact evaluation, approximate
evaluation and pretty-printing alike.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import mpmath

from .errors import Pole, UnknownSeries
from .expr import INF, Const, Div, Function, Lin, Mono, Poch, Scope, Sum, limit_sum_expr, prod
from .scalar import Binding, MetaPoly, Monomial

NUM, DEN = "numerator", "denominator"


@dataclass(frozen=True)
class LinearFactorSpec:
    """The factor ``1 - m * q^(kcoef*k)``."""

    m: Monomial
    kcoef: int
    side: str = NUM

    def monomial(self) -> Monomial:
        return self.m * (Monomial.symbol("q") ** MetaPoly.parse(f"{self.kcoef}*k"))


@dataclass(frozen=True)
class FactorSpec:
    """``(argument; q^base_exp)_{lam*k + mu}``."""

    argument: Monomial
    base_exp: Fraction
    lam: int
    mu: MetaPoly = field(default_factory=MetaPoly)
    side: str = NUM

    def length(self) -> MetaPoly:
        return MetaPoly.var("k") * self.lam + self.mu


@dataclass(frozen=True)
class GeometricSpec:
    """``sign^k * base^k * q^((alpha k^2 + beta k + gamma)/2)``."""

    sign: int = 1
    base: Monomial = field(default_factory=Monomial)
    quad: tuple = (0, 0, 0)

    def monomial(self) -> Monomial:
        k = MetaPoly.var("k")
        alpha, beta, gamma = self.quad
        expo = (k * k * alpha + k * beta + gamma) / 2
        out = (self.base ** k) * Monomial(powers=(("q", expo),) if expo else ())
        if self.sign == -1:
            out = out * Monomial(sign=k)
        return out


@dataclass(frozen=True)
class TermTemplate:
    linear: tuple
    poch_factors: tuple
    geometric: GeometricSpec

    def to_expr(self):
        num, den = [], []
        for lf in self.linear:
            (num if lf.side == NUM else den).append(Lin(lf.monomial()))
        for f in self.poch_factors:
            base = Monomial.symbol("q") ** MetaPoly.const(f.base_exp)
            (num if f.side == NUM else den).append(Poch(f.argument, base, f.length()))
        num.append(Mono(self.geometric.monomial()))
        top = prod(num)
        return Div(top, prod(den)) if den else top


@dataclass(frozen=True)
class SeriesDef:
    """A named sum over ``k``.

    ``range`` is ``"partial"`` (summing ``k < count``, the count bound to the
    meta-variable ``n`` inside the body) or ``"infinite"``.
    """

    name: str
    params: tuple
    template: TermTemplate
    range: str = "partial"
    description: str = ""

    @property
    def geometric(self) -> GeometricSpec:
        return self.template.geometric

    def body(self):
        return self.template.to_expr()

    def function(self) -> Function:
        count = MetaPoly.var("n") if self.range == "partial" else INF
        return Function(self.name, self.params, Sum("k", count, self.body()),
                        "n" if self.range == "partial" else None)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def _m(text) -> Monomial:
    return Monomial.parse(text)


def lf(m, kcoef, side=NUM) -> LinearFactorSpec:
    return LinearFactorSpec(_m(m), kcoef, side)


def fac(arg, base_exp, lam=1, mu=0, side=NUM) -> FactorSpec:
    return FactorSpec(_m(arg), Fraction(base_exp), lam, MetaPoly.parse(mu), side)


def facs(args, base_exp, lam=1, side=NUM):
    return [fac(a, base_exp, lam, 0, side) for a in args]


def geo(sign=1, base="1", quad=(0, 0, 0)) -> GeometricSpec:
    return GeometricSpec(sign, _m(base), tuple(quad))


def _series(name, params, linear, num, den, g, rng="partial", desc=""):
    factors = tuple(num) + tuple(
        FactorSpec(f.argument, f.base_exp, f.lam, f.mu, DEN) for f in den
    )
    return SeriesDef(name, tuple(params), TermTemplate(tuple(linear), factors, g), rng, desc)


_WP = lf("a", 5)  # (1 - q^{5k} a)


def _catalog() -> dict:
    out = {}

    def put(s):
        out[s.name] = s

    put(_series(
        "F", "abd", [_WP],
        facs(["b", "d"], 1) + [fac("qa/bd", 1, 3), fac("b^2d^2/q^2", 4)],
        [fac("q^3a/b^2d^2", 1)] + facs(["bd", "bd/q", "qbd"], 2) + facs(["q^4a/b", "q^4a/d"], 4),
        geo(base="q"), desc="quartic series F_n(a,b,d)"))
    put(_series(
        "G", "ace", [_WP],
        [fac("c^2e^2/q^2a^3", 1)] + facs(["qa^2/ce", "q^2a^2/ce", "q^3a^2/ce"], 2) + facs(["c", "e"], 4),
        facs(["qa/c", "qa/e"], 1) + [fac("ce/a", 1, 3), fac("q^6a^4/c^2e^2", 4)],
        geo(base="q"), desc="quartic series G_n(a,c,e)"))
    put(_series(
        "U", "abd", [_WP],
        [fac("q^2a/bd", 1)] + facs(["b", "d"], 2) + [fac("q^3a^2/bd", 6), fac("b^2d^2/q^3a", 3)],
        [fac("bd", 2, 2), fac("q^5a^2/b^2d^2", 2)] + facs(["q^3a/b", "q^3a/d"], 3),
        geo(-1, "q^3a/bd", (1, -1, 0)), desc="quartic series U_n(a,b,d)"))
    put(_series(
        "V", "ace", [_WP],
        [fac("a^2/ce", 2, 2), fac("qc^2e^2/a^2", 2)] + facs(["qc", "qe"], 3),
        [fac("qce/a", 1)] + facs(["qa/c", "qa/e"], 2) + [fac("q^5ce", 6), fac("q^2a^3/c^2e^2", 3)],
        geo(-1, "a/ce", (-1, 1, 0)), desc="quartic series V_n(a,c,e)"))
    put(_series(
        "U_diamond", "abd", [lf("q^9a^3/b^3d^3", 9)],
        facs(["q^2a/bd", "q^4a/bd", "q^6a/bd"], 3) + facs(["q^3a^2/bd", "q^9a^2/b^2d^3", "q^9a^2/b^3d^2"], 6),
        facs(["q^3a/b", "q^3a/d", "q^9a/b^2d^2"], 3)
        + facs(["q^9a^2/b^2d^2", "q^11a^2/b^2d^2", "q^13a^2/b^2d^2"], 6),
        geo(base="q^3"), desc="quadratic partial sum in base q^3 attached to U"))
    put(_series(
        "U_triangle", "abd", [lf("q^5a^2/bd^2", 8)],
        facs(["q^3a^2/bd", "q^9a^2/b^2d^3"], 6) + [fac("b", 2, 2)] + facs(["q^2a/bd", "q^5a/bd"], 2),
        facs(["q^6a/d", "q^9a/d"], 6) + [fac("q^7a^2/b^2d^2", 2, 2)] + facs(["q^4/d", "bd/q^2"], 2),
        geo(base="q^2"), desc="cubic partial sum in base q^2 attached to U"))
    put(_series(
        "U_star", "abd", [lf("b^2d/qa", 5)],
        [fac("b^2d^2/qa^2", 2), fac("b", 2, 2)] + facs(["q^3b/a", "b^2d^2/q^3a"], 3),
        facs(["q^4/d", "bd/q^2"], 2) + [fac("bd/a", 1), fac("q^3a/d", 3), fac("q^3b^3d^2/a^2", 6)],
        geo(-1, "qa/bd", (-1, 1, 0)), desc="quartic partial sum attached to U"))
    put(_series(
        "V_diamond", "ace", [lf("q^3c^3e^3/a^3", 9)],
        facs(["qc", "qe", "q^4c^2e^2/a^3"], 3) + facs(["qc^2e^2/a^2", "q^3c^2e^2/a^2", "q^5c^2e^2/a^2"], 6),
        facs(["qce/a", "q^3ce/a", "q^5ce/a"], 3) + facs(["q^5ce", "q^8c^2e^3/a^3", "q^8c^3e^2/a^3"], 6),
        geo(base="q^3"), desc="quadratic partial sum in base q^3 attached to V"))
    put(_series(
        "V_triangle", "ace", [lf("q^2c^2e/a", 8)],
        facs(["q^3c/a", "a^2/ce"], 2) + [fac("qc", 3, 2), fac("qc^2e^2/a^2", 2, 2)],
        facs(["ce/a", "q^3ce/a"], 2) + [fac("q^3a/e", 2, 2)] + facs(["q^5ce", "q^8c^3e^2/a^3"], 6),
        geo(base="q^2"), desc="cubic partial sum in base q^2 attached to V"))
    put(_series(
        "V_star", "ace", [lf("q^2a^2/ce^2", 5)],
        facs(["q^3c/a", "a^2/ce"], 2) + [fac("qa/ce", 1), fac("qc", 3), fac("q^4a^3/c^2e^3", 6)],
        [fac("q^3a^2/c^2e^2", 2), fac("q^3a/e", 2, 2)] + facs(["q^2a^3/c^2e^2", "q^5/e"], 3),
        geo(-1, "q^2a/ce", (1, -1, 0)), desc="quartic partial sum attached to V"))
    put(_series(
        "limit_u_quadratic", "bd", [],
        facs(["b", "d"], 2), [fac("bd", 2, 2)],
        geo(1, "bd", (4, -4, 0)), "infinite", "limit of U_n(q^{3m}a,b,d)"))
    put(_series(
        "limit_u_cubic", "abd", [],
        [fac("b^2d^2/q^3a", 3)], [fac("q^3a/b", 3)],
        geo(1, "a/b", (3, 3, 0)), "infinite", "limit of U_n(q^{4m}a,q^{4m}b,q^{-2m}d)"))
    return out


_BUILTINS = _catalog()
_FUNCTIONS = {name: s.function() for name, s in _BUILTINS.items()}

SERIES_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> SeriesDef:
    try:
        return _BUILTINS[name]
    except KeyError:
        raise UnknownSeries(name) from None


def series_function(name: str) -> Function:
    builtin(name)
    return _FUNCTIONS[name]


def _scope(bind: Binding, n, m, extra=None, eps=None) -> Scope:
    meta = {"n": n, "m": m}
    if extra:
        meta.update(extra)
    return Scope(bind, {k: v for k, v in meta.items() if v is not None}, {}, None, eps)


def term(s: SeriesDef, k: int, bind: Binding, n: int | None = None, m: int | None = None):
    """The k-th summand with all outer meta-variables bound."""
    if k < 0:
        raise ValueError("term index must be non-negative")
    with _precision(bind):
        return s.body().ev(_scope(bind, n, m, {"k": k}))


def partial_sum(s: SeriesDef, count: int, bind: Binding, n: int | None = None, m: int | None = None):
    """sum_{k < count} term(k)."""
    if count < 0:
        raise ValueError("count must be non-negative")
    body = s.body()
    with _precision(bind):
        sc = _scope(bind, n, m)
        total = bind.const(0)
        for k in range(count):
            total = total + body.ev(sc.with_meta(k=k))
        return total


@dataclass(frozen=True)
class LimitResult:
    value: object
    terms: int
    eps: object

    def __float__(self):
        return float(self.value)


def limit_sum(s: SeriesDef, bind: Binding, eps=None, precision: int | None = None,
              n: int | None = None, m: int | None = None) -> LimitResult:
    """Sum the series to infinity with the adaptive stopping rule."""
    if bind.exact_mode:
        raise ValueError("limit_sum requires an approx binding")
    prec = precision or bind.precision
    with mpmath.workdps(prec):
        e = mpmath.mpf(eps) if eps is not None else mpmath.mpf(10) ** (-(prec // 2))
        value, used = limit_sum_expr(s.body(), "k", _scope(bind, n, m, eps=e))
        return LimitResult(value, used, e)


def normalized_partial_sum(s: SeriesDef, count: int, bind: Binding, n: int | None = None,
                           m: int | None = None):
    """partial_sum divided by the k = 0 term.

    For F, G, U and V the k = 0 term is 1 - a, which is the normalization the
    corollaries carry through their (1 - q^{5k}a)/(1 - a) factor.
    """
    head = term(s, 0, bind, n, m)
    if head == 0:
        raise Pole(f"{s.name}: zero k = 0 term")
    with _precision(bind):
        return partial_sum(s, count, bind, n, m) / head


def normalized_limit_sum(s: SeriesDef, bind: Binding, eps=None, precision: int | None = None,
                         n: int | None = None, m: int | None = None):
    """limit_sum divided by the k = 0 term."""
    head = term(s, 0, bind, n, m)
    if head == 0:
        raise Pole(f"{s.name}: zero k = 0 term")
    res = limit_sum(s, bind, eps, precision, n, m)
    with mpmath.workdps(precision or bind.precision):
        return LimitResult(res.value / head, res.terms, res.eps)


class _precision:
    def __init__(self, bind: Binding):
        self.ctx = mpmath.workdps(bind.precision) if bind.precision else None

    def __enter__(self):
        if self.ctx:
            self.ctx.__enter__()

    def __exit__(self, *exc):
        if self.ctx:
            self.ctx.__exit__(*exc)
