"""Expression trees over monomials, shifted factorials and finite sums.

Every formula in the catalog (series summands, Abel pairs, identities) is a
tree of these nodes.  Trees are immutable; evaluation is a pure function of
a :class:`Scope` (binding + meta-variable values + parameter substitutions).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

import mpmath

from .errors import NoDecay, NonRationalPower, Pole, PoleAtExtension, ZeroArgument
from .scalar import Binding, MetaPoly, Monomial, poch, poch_inf

INF = "inf"

# stopping rule for infinite sums
SMALL_RUN = 8
NO_DECAY_RUN = 64
MAX_TERMS = 20000


class Scope:
    """Evaluation context.

    ``subs`` maps a formal parameter to ``(coeff, {base_symbol: exponent})``,
    i.e. a monomial already resolved against the outer meta-variables.
    """

    __slots__ = ("binding", "meta", "subs", "p", "eps")

    def __init__(self, binding: Binding, meta=None, subs=None, p=None, eps=None):
        self.binding = binding
        self.meta = dict(meta or {})
        self.subs = subs or {}
        self.p = p
        self.eps = eps

    def child(self, meta=None, subs=None) -> "Scope":
        sc = Scope(self.binding, self.meta if meta is None else meta,
                   self.subs if subs is None else subs, self.p, self.eps)
        return sc

    def with_meta(self, **kw) -> "Scope":
        meta = dict(self.meta)
        meta.update(kw)
        return self.child(meta=meta)


def resolve_monomial(mono: Monomial, sc: Scope):
    """Resolve meta-variables and substitutions; returns (coeff, exps)."""
    meta = sc.meta
    coeff = mono.coeff
    if mono.sign:
        s = mono.sign(meta)
        if s.denominator != 1:
            raise NonRationalPower(f"(-1)^{s} in {mono}")
        if s.numerator % 2:
            coeff = -coeff
    acc: dict = {}
    subs = sc.subs
    for sym, e in mono.powers:
        c = e(meta)
        if not c:
            continue
        sub = subs.get(sym)
        if sub is None:
            acc[sym] = acc.get(sym, 0) + c
            continue
        scoeff, sexps = sub
        if scoeff != 1:
            if c.denominator != 1:
                if scoeff < 0:
                    raise NonRationalPower(f"({scoeff})^{c} substituting {sym}")
                raise NonRationalPower(f"rational coefficient to power {c}")
            coeff *= scoeff ** int(c)
        for b, x in sexps.items():
            acc[b] = acc.get(b, 0) + x * c
    return coeff, acc


def monomial_value(mono: Monomial, sc: Scope):
    coeff, acc = resolve_monomial(mono, sc)
    bnd = sc.binding
    val = bnd.const(coeff)
    for b, x in acc.items():
        if x:
            val = val * bnd.power(b, Fraction(x))
    return val


def _length(length, sc: Scope) -> int:
    v = length(sc.meta)
    if v.denominator != 1:
        raise ValueError(f"non-integer factorial length {v} from {length}")
    return int(v)


# ---------------------------------------------------------------------------
# nodes
# ---------------------------------------------------------------------------


class Expr:
    def ev(self, sc: Scope):
        raise NotImplementedError

    def __add__(self, other):
        return Add((self, lift(other)))

    def __radd__(self, other):
        return Add((lift(other), self))

    def __sub__(self, other):
        return Add((self, Neg(lift(other))))

    def __rsub__(self, other):
        return Add((lift(other), Neg(self)))

    def __mul__(self, other):
        return Mul((self, lift(other)))

    def __rmul__(self, other):
        return Mul((lift(other), self))

    def __truediv__(self, other):
        return Div(self, lift(other))

    def __rtruediv__(self, other):
        return Div(lift(other), self)

    def __neg__(self):
        return Neg(self)


def lift(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, (int, Fraction)):
        return Const(Fraction(x))
    if isinstance(x, (str, Monomial)):
        return Mono(Monomial.parse(x))
    raise TypeError(f"cannot lift {x!r}")


@dataclass(frozen=True, eq=False)
class Const(Expr):
    value: Fraction

    def ev(self, sc):
        return sc.binding.const(self.value)

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True, eq=False)
class Mono(Expr):
    mono: Monomial

    def ev(self, sc):
        return monomial_value(self.mono, sc)

    def __str__(self):
        return str(self.mono)


@dataclass(frozen=True, eq=False)
class Lin(Expr):
    """The linear factor (1 - mono)."""

    mono: Monomial

    def ev(self, sc):
        return 1 - monomial_value(self.mono, sc)

    def __str__(self):
        return f"(1-{self.mono})"


@dataclass(frozen=True, eq=False)
class Poch(Expr):
    """(arg; base)_length; ``length`` may be :data:`INF`."""

    arg: Monomial
    base: Monomial
    length: object  # MetaPoly or INF

    def ev(self, sc):
        x = monomial_value(self.arg, sc)
        base = monomial_value(self.base, sc)
        if self.length == INF:
            if sc.binding.exact_mode:
                raise NonRationalPower(f"infinite product {self} in exact mode")
            return poch_inf(x, base, sc.eps)
        return cached_poch(sc.binding, x, base, _length(self.length, sc))

    def __str__(self):
        return f"({self.arg};{self.base})_{{{self.length}}}"


def cached_poch(bnd: Binding, x, base, length: int):
    if length < 0:
        try:
            return poch(x, base, length)
        except ZeroDivisionError:
            raise PoleAtExtension(f"({x};{base})_{length}") from None
    key = (x, base)
    prefix = bnd._poch_cache.get(key)
    if prefix is None:
        prefix = [bnd.const(1)]
        bnd._poch_cache[key] = prefix
    while len(prefix) <= length:
        i = len(prefix) - 1
        prefix.append(prefix[-1] * (1 - x * base ** i))
    return prefix[length]


@dataclass(frozen=True, eq=False)
class Add(Expr):
    terms: tuple

    def ev(self, sc):
        total = None
        for t in self.terms:
            v = t.ev(sc)
            total = v if total is None else total + v
        return total

    def __str__(self):
        return "(" + " + ".join(str(t) for t in self.terms) + ")"


@dataclass(frozen=True, eq=False)
class Neg(Expr):
    inner: Expr

    def ev(self, sc):
        return -self.inner.ev(sc)

    def __str__(self):
        return f"-{self.inner}"


@dataclass(frozen=True, eq=False)
class Mul(Expr):
    factors: tuple

    def ev(self, sc):
        out = None
        for f in self.factors:
            v = f.ev(sc)
            out = v if out is None else out * v
        return out

    def __str__(self):
        return "·".join(str(f) for f in self.factors)


@dataclass(frozen=True, eq=False)
class Div(Expr):
    num: Expr
    den: Expr

    def ev(self, sc):
        d = self.den.ev(sc)
        if d == 0:
            raise Pole(f"zero denominator {self.den}")
        return self.num.ev(sc) / d

    def __str__(self):
        return f"{self.num} / [{self.den}]"


@dataclass(frozen=True, eq=False)
class Parity(Expr):
    """``even`` when the meta-variable is even, ``odd`` otherwise."""

    var: str
    even: Expr
    odd: Expr

    def ev(self, sc):
        return (self.even if sc.meta[self.var] % 2 == 0 else self.odd).ev(sc)

    def __str__(self):
        return f"[{self.var} even: {self.even} | odd: {self.odd}]"


@dataclass(frozen=True, eq=False)
class Sum(Expr):
    """sum_{var=0}^{count-1} body, or an infinite sum when count is INF."""

    var: str
    count: object
    body: Expr

    def ev(self, sc):
        if self.count == INF:
            return limit_sum_expr(self.body, self.var, sc)[0]
        n = _length(self.count, sc)
        total = sc.binding.const(0)
        meta = dict(sc.meta)
        for k in range(n):
            meta[self.var] = k
            total = total + self.body.ev(sc.child(meta=dict(meta)))
        return total

    def __str__(self):
        return f"Σ_{{{self.var}<{self.count}}} {self.body}"


def limit_sum_expr(body: Expr, var: str, sc: Scope):
    """Sum an infinite series with the adaptive stopping rule.

    Stops once SMALL_RUN consecutive terms are below eps*max(1,|S|) and the
    geometric tail estimate |t| r / (1 - r) built from the observed ratio is
    below eps*max(1,|S|).  Returns (value, terms_used).
    """
    if sc.binding.exact_mode:
        raise NonRationalPower("infinite sum requested in exact mode")
    eps = sc.eps
    total = mpmath.mpf(0)
    small = growing = 0
    prev = None
    meta = dict(sc.meta)
    for K in range(MAX_TERMS):
        meta[var] = K
        t = body.ev(sc.child(meta=dict(meta)))
        total += t
        at = abs(t)
        scale = max(mpmath.mpf(1), abs(total))
        ratio = (at / prev) if prev else (mpmath.mpf(0) if at == 0 else None)
        if ratio is not None and ratio >= 1 and at != 0:
            growing += 1
            if growing >= NO_DECAY_RUN:
                raise NoDecay(f"term ratio >= 1 for {NO_DECAY_RUN} terms", K + 1)
        else:
            growing = 0
        if at < eps * scale:
            small += 1
        else:
            small = 0
        if small >= SMALL_RUN and ratio is not None and ratio < 1:
            tail = at * ratio / (1 - ratio) if ratio else mpmath.mpf(0)
            if tail < eps * scale:
                return total, K + 1
        prev = at
    raise NoDecay(f"no convergence within {MAX_TERMS} terms", MAX_TERMS)


@dataclass(frozen=True)
class Function:
    """A named formula with formal parameters.

    ``count_var`` names the meta-variable that receives the partial-sum
    length when the function is a series.
    """

    name: str
    params: tuple
    body: Expr
    count_var: str | None = None

    def __call__(self, *args, count=None) -> "Call":
        if len(args) != len(self.params):
            raise TypeError(f"{self.name} takes {len(self.params)} arguments")
        cnt = None
        if count is not None:
            cnt = count if count == INF else MetaPoly.parse(count)
        return Call(self, tuple(Monomial.parse(a) for a in args), cnt)


@dataclass(frozen=True, eq=False)
class Call(Expr):
    fn: Function
    args: tuple
    count: object = None

    def ev(self, sc):
        subs = {}
        for p, a in zip(self.fn.params, self.args):
            subs[p] = resolve_monomial(a, sc)
        meta = dict(sc.meta)
        if self.fn.count_var is not None:
            if self.count is None:
                raise ValueError(f"series {self.fn.name} called without a count")
            meta[self.fn.count_var] = INF if self.count == INF else _length(self.count, sc)
        return _eval_body(self.fn, sc.child(meta=meta, subs=subs))

    def __str__(self):
        cnt = "" if self.count is None else f"_{{{self.count}}}"
        return f"{self.fn.name}{cnt}(" + ", ".join(str(a) for a in self.args) + ")"


def _eval_body(fn: Function, sc: Scope):
    body = fn.body
    if fn.count_var is not None and sc.meta.get(fn.count_var) == INF:
        if isinstance(body, Sum):
            return limit_sum_expr(body.body, body.var, sc)[0]
    return body.ev(sc)


# ---------------------------------------------------------------------------
# elliptic building blocks (numeric only, or p = 0)
# ---------------------------------------------------------------------------


def theta_value(x, p, eps):
    """theta(x; p) = (x; p)_inf (p/x; p)_inf."""
    if x == 0:
        raise ZeroArgument("theta(0; p)")
    if p == 0:
        return 1 - x
    return poch_inf(x, p, eps / 2) * poch_inf(p / x, p, eps / 2)


@dataclass(frozen=True, eq=False)
class Theta(Expr):
    arg: Monomial

    def ev(self, sc):
        x = monomial_value(self.arg, sc)
        if not sc.p:
            return 1 - x
        return theta_value(x, sc.p, sc.eps)

    def __str__(self):
        return f"θ({self.arg};p)"


@dataclass(frozen=True, eq=False)
class EllPoch(Expr):
    """[arg; base, p]_length = prod_{i<length} theta(arg*base^i; p)."""

    arg: Monomial
    base: Monomial
    length: MetaPoly

    def ev(self, sc):
        x = monomial_value(self.arg, sc)
        base = monomial_value(self.base, sc)
        L = _length(self.length, sc)
        if not sc.p:
            return cached_poch(sc.binding, x, base, L)
        if L < 0:
            raise ValueError("negative elliptic factorial length")
        out = mpmath.mpf(1)
        eps = sc.eps / max(L, 1)
        for i in range(L):
            out *= theta_value(x * base ** i, sc.p, eps)
        return out

    def __str__(self):
        return f"[{self.arg};{self.base},p]_{{{self.length}}}"


# ---------------------------------------------------------------------------
# compact builders used by the catalogs
# ---------------------------------------------------------------------------


def mono(text) -> Mono:
    return Mono(Monomial.parse(text))


def lin(text) -> Lin:
    return Lin(Monomial.parse(text))


def qbase(base_exp) -> Monomial:
    return Monomial.parse("q") ** MetaPoly.parse(base_exp)


def P(arg, base_exp, length="k") -> Poch:
    ln = length if length == INF else MetaPoly.parse(length)
    return Poch(Monomial.parse(arg), qbase(base_exp), ln)


def prod(factors: Sequence[Expr]) -> Expr:
    factors = list(factors)
    if not factors:
        return Const(Fraction(1))
    if len(factors) == 1:
        return factors[0]
    return Mul(tuple(factors))


def Ps(args: Sequence[str], base_exp, length="k") -> Expr:
    """[x1, x2, ...; q^base]_length."""
    return prod([P(a, base_exp, length) for a in args])


def F(nums: Sequence[str], dens: Sequence[str], base_exp, length="k") -> Expr:
    """Fraction of shifted factorials, all with the same base and length."""
    return Div(Ps(nums, base_exp, length), Ps(dens, base_exp, length))


def lins(nums: Sequence[str], dens: Sequence[str] = ()) -> Expr:
    """prod (1 - num_i) / prod (1 - den_j)."""
    top = prod([lin(x) for x in nums])
    if not dens:
        return top
    return Div(top, prod([lin(x) for x in dens]))


def E(arg, base_exp, length="k") -> EllPoch:
    return EllPoch(Monomial.parse(arg), qbase(base_exp), MetaPoly.parse(length))


def EF(nums, dens, base_exp, length="k") -> Expr:
    return Div(prod([E(a, base_exp, length) for a in nums]),
               prod([E(a, base_exp, length) for a in dens]))


def Esum(count, body, var="k") -> Sum:
    return Sum(var, count if count == INF else MetaPoly.parse(count), body)


def evaluate(expr: Expr, binding: Binding, meta: Mapping[str, int] | None = None,
             subs: Mapping[str, Monomial] | None = None, p=None, eps=None):
    """Evaluate ``expr`` at the top level.

    ``subs`` maps constrained parameters to monomials in the free ones; they
    are resolved with ``meta`` before evaluation.
    """
    sc = Scope(binding, meta or {}, {}, p, eps)
    if subs:
        sc = sc.child(subs={s: resolve_monomial(Monomial.parse(m), sc) for s, m in subs.items()})
    return expr.ev(sc)


def monomial_eval(m: Monomial | str, bind: Binding, n: int | None = None, mm: int | None = None,
                  k: int | None = None):
    """Value of a monomial with the given meta values bound (``mm`` binds m)."""
    if isinstance(m, str):
        m = Monomial.parse(m)
    meta = {name: v for name, v in (("n", n), ("m", mm), ("k", k)) if v is not None}
    missing = {v for _, e in m.powers for v in e.variables()} - set(meta)
    if m.sign:
        missing |= m.sign.variables() - set(meta)
    if missing:
        raise ValueError(f"unbound meta variable(s) {sorted(missing)} in {m}")
    return monomial_value(m, Scope(bind, meta))
