"""Scalars, monomials and q-shifted factorials.

Two evaluation backends share one code path:

* exact   -- ``gmpy2.mpq`` rationals.  Every parameter is bound as the square
  of a rational *seed*, so half-integer powers such as ``q^{3/2}`` or
  ``a^{1/2}`` remain exact.
* approx  -- ``mpmath.mpf`` at a caller-chosen working precision.

Monomials carry exponents that are polynomials in the meta-variables
``n, m, k, delta`` so that a single record such as ``q^{5k}a`` or
``q^{3/2+2n}a/b`` describes a whole family of factors.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

import gmpy2
import mpmath
from gmpy2 import mpq

from .errors import (
    DivergentBase,
    MissingBinding,
    NonRationalPower,
    Pole,
    PoleAtExtension,
)

SYMBOLS = ("q", "a", "b", "c", "d", "e")
META_VARS = ("n", "m", "k", "delta", "j")

Rational = Union[int, Fraction]
Scalar = Union["gmpy2.mpq", "mpmath.mpf"]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if type(x).__name__ == "mpq":
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot convert {x!r} to Fraction")


# ---------------------------------------------------------------------------
# polynomial exponents in the meta-variables
# ---------------------------------------------------------------------------


class MetaPoly:
    """Polynomial with rational coefficients in the meta-variables.

    Stored as a tuple of ``(sorted variable tuple, coefficient)`` pairs; the
    empty tuple is the constant term.
    """

    __slots__ = ("terms", "_const")

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        clean = {}
        for mon, c in (terms or {}).items():
            c = as_fraction(c)
            if c:
                key = tuple(sorted(mon))
                clean[key] = clean.get(key, Fraction(0)) + c
        self.terms = tuple(sorted((kv for kv in clean.items() if kv[1]), key=_term_order))
        self._const = self.terms[0][1] if len(self.terms) == 1 and not self.terms[0][0] else (
            Fraction(0) if not self.terms else None
        )

    @classmethod
    def const(cls, c: Rational) -> "MetaPoly":
        return cls({(): c})

    @classmethod
    def var(cls, name: str) -> "MetaPoly":
        return cls({(name,): 1})

    @classmethod
    def parse(cls, text) -> "MetaPoly":
        if isinstance(text, MetaPoly):
            return text
        if isinstance(text, (int, Fraction)):
            return cls.const(text)
        return _parse_poly(str(text))

    @property
    def is_const(self) -> bool:
        return self._const is not None

    @property
    def constant(self) -> Fraction:
        if self._const is None:
            raise ValueError(f"{self} is not constant")
        return self._const

    def variables(self) -> set[str]:
        return {v for mon, _ in self.terms for v in mon}

    def __call__(self, meta: Mapping[str, int]) -> Fraction:
        if self._const is not None:
            return self._const
        total = Fraction(0)
        for mon, c in self.terms:
            t = c
            for v in mon:
                try:
                    t *= meta[v]
                except KeyError:
                    raise MissingBinding(f"meta-variable {v!r} unbound in {self}") from None
            total += t
        return total

    def _items(self):
        return dict(self.terms)

    def __add__(self, other) -> "MetaPoly":
        other = MetaPoly.parse(other)
        d = self._items()
        for mon, c in other.terms:
            d[mon] = d.get(mon, Fraction(0)) + c
        return MetaPoly(d)

    __radd__ = __add__

    def __neg__(self) -> "MetaPoly":
        return MetaPoly({mon: -c for mon, c in self.terms})

    def __sub__(self, other) -> "MetaPoly":
        return self + (-MetaPoly.parse(other))

    def __rsub__(self, other) -> "MetaPoly":
        return MetaPoly.parse(other) - self

    def __mul__(self, other) -> "MetaPoly":
        other = MetaPoly.parse(other)
        d: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                mon = tuple(sorted(m1 + m2))
                d[mon] = d.get(mon, Fraction(0)) + c1 * c2
        return MetaPoly(d)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MetaPoly":
        other = MetaPoly.parse(other)
        return self * MetaPoly.const(1 / other.constant)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MetaPoly.const(other)
        return isinstance(other, MetaPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"MetaPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mon, c in self.terms:
            name = "".join("δ" if v == "delta" else v for v in mon)
            if not mon:
                parts.append(_fmt_frac(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append(_fmt_frac(c) + name)
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


def _term_order(item):
    mon, _ = item
    return (len(mon), mon)


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


_POLY_ZERO = MetaPoly()
_POLY_ONE = MetaPoly.const(1)


def _parse_poly(text: str) -> MetaPoly:
    src = text.replace("δ", "delta").replace("−", "-")
    # implicit multiplication: "3k" -> "3*k", "2(n+1)" -> "2*(n+1)", ")(" -> ")*("
    src = re.sub(r"(\d)\s*([A-Za-z(])", r"\1*\2", src)
    src = re.sub(r"\)\s*([\w(])", r")*\1", src)
    src = src.replace("C*(", "C(")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"bad exponent expression {text!r}") from exc
    return _poly_from_ast(tree.body, text)


def _poly_from_ast(node, text) -> MetaPoly:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return MetaPoly.const(node.value)
    if isinstance(node, ast.Name):
        if node.id not in META_VARS:
            raise ValueError(f"unknown meta-variable {node.id!r} in {text!r}")
        return MetaPoly.var(node.id)
    if isinstance(node, ast.UnaryOp):
        inner = _poly_from_ast(node.operand, text)
        if isinstance(node.op, ast.USub):
            return -inner
        if isinstance(node.op, ast.UAdd):
            return inner
    if isinstance(node, ast.BinOp):
        left = _poly_from_ast(node.left, text)
        right = _poly_from_ast(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "C":
        # binomial coefficient C(x, 2) = x(x-1)/2
        x, two = node.args
        if not (isinstance(two, ast.Constant) and two.value == 2):
            raise ValueError("only C(x, 2) is supported")
        px = _poly_from_ast(x, text)
        return px * (px - 1) / 2
    raise ValueError(f"unsupported exponent syntax in {text!r}")


# ---------------------------------------------------------------------------
# monomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Monomial:
    """``coeff * (-1)^sign * prod sym^exp`` with polynomial exponents.

    Exponents must resolve to half-integers once the meta-variables are
    fixed; this is checked at evaluation time.
    """

    coeff: Fraction = Fraction(1)
    sign: MetaPoly = _POLY_ZERO
    powers: tuple = ()

    @classmethod
    def parse(cls, text) -> "Monomial":
        if isinstance(text, Monomial):
            return text
        return _parse_monomial(str(text))

    @classmethod
    def symbol(cls, sym: str) -> "Monomial":
        return cls(powers=((sym, _POLY_ONE),))

    def exponent(self, sym: str) -> MetaPoly:
        for s, e in self.powers:
            if s == sym:
                return e
        return _POLY_ZERO

    def __mul__(self, other) -> "Monomial":
        other = Monomial.parse(other) if not isinstance(other, Monomial) else other
        d = dict(self.powers)
        for s, e in other.powers:
            d[s] = d.get(s, _POLY_ZERO) + e
        return Monomial(self.coeff * other.coeff, self.sign + other.sign, _canon(d))

    def __truediv__(self, other) -> "Monomial":
        other = Monomial.parse(other) if not isinstance(other, Monomial) else other
        return self * other.inverse()

    def inverse(self) -> "Monomial":
        if self.coeff == 0:
            raise Pole(f"1/({self})")
        return Monomial(1 / self.coeff, self.sign, tuple((s, -e) for s, e in self.powers))

    def __pow__(self, e) -> "Monomial":
        e = MetaPoly.parse(e)
        coeff, sign = Fraction(1), self.sign * e
        c = self.coeff
        if c < 0:
            sign = sign + e
            c = -c
        if c != 1:
            if not e.is_const or e.constant.denominator != 1:
                raise NonRationalPower(f"({self})^({e}) with coefficient {self.coeff}")
            coeff = c ** int(e.constant)
        return Monomial(coeff, sign, _canon({s: x * e for s, x in self.powers}))

    def substitute(self, mapping: Mapping[str, "Monomial"]) -> "Monomial":
        out = Monomial(self.coeff, self.sign)
        for s, e in self.powers:
            if s in mapping:
                out = out * (mapping[s] ** e)
            else:
                out = out * Monomial(powers=((s, e),))
        return out

    def __str__(self) -> str:
        return _format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def _canon(d: Mapping[str, MetaPoly]) -> tuple:
    return tuple(sorted(((s, e) for s, e in d.items() if e), key=lambda t: SYMBOLS.index(t[0])))


_TOKEN = re.compile(r"\s*(?:(\(-1\))|([qabcde])|(\d+))\s*(?:\^\s*(\{[^{}]*\}|-?\d+|[nmkj]))?")


def _parse_exp(tok: str | None) -> MetaPoly:
    if tok is None:
        return _POLY_ONE
    if tok.startswith("{"):
        return MetaPoly.parse(tok[1:-1])
    if tok.isalpha():
        return MetaPoly.var(tok)
    return MetaPoly.const(int(tok))


def _parse_part(text: str) -> Monomial:
    pos, out = 0, Monomial()
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse monomial fragment {text[pos:]!r}")
        neg, sym, num, exp = mt.groups()
        e = _parse_exp(exp)
        if neg:
            out = out * Monomial(sign=e)
        elif sym:
            out = out * Monomial(powers=((sym, e),))
        else:
            if not e.is_const or e.constant.denominator != 1:
                raise ValueError(f"non-integer power of a number in {text!r}")
            out = out * Monomial(coeff=Fraction(int(num)) ** int(e.constant))
        pos = mt.end()
    return out


def _parse_monomial(text: str) -> Monomial:
    s = text.strip().replace("−", "-")
    neg = s.startswith("-")
    if neg:
        s = s[1:]
    depth, split = 0, None
    for i, ch in enumerate(s):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch == "/" and depth == 0:
            if split is not None:
                raise ValueError(f"more than one '/' in {text!r}")
            split = i
    num = _parse_part(s if split is None else s[:split])
    if split is not None:
        num = num / _parse_part(s[split + 1:])
    if neg:
        num = Monomial(-num.coeff, num.sign, num.powers)
    return num


def _format_monomial(m: Monomial) -> str:
    def fmt(sym, e):
        if e == _POLY_ONE:
            return sym
        txt = str(e)
        return f"{sym}^{txt}" if re.fullmatch(r"\d+", txt) else f"{sym}^{{{txt}}}"

    num = [fmt(s, e) for s, e in m.powers if not _negative_leading(e)]
    den = [fmt(s, -e) for s, e in m.powers if _negative_leading(e)]
    c = m.coeff
    head = ""
    if c.numerator not in (1, -1) or not num:
        head = str(abs(c.numerator))
    if c.denominator != 1:
        den.insert(0, str(c.denominator))
    body = head + "".join(num)
    if den:
        body += "/" + "".join(den)
    if m.sign:
        body = f"(-1)^{{{m.sign}}}" + body
    return ("-" if c < 0 else "") + body


def _negative_leading(e: MetaPoly) -> bool:
    if not e.terms:
        return False
    if e.is_const:
        return e.constant < 0
    return all(c < 0 for _, c in e.terms)


# ---------------------------------------------------------------------------
# bindings
# ---------------------------------------------------------------------------


@dataclass
class Binding:
    """Values for the parameter alphabet in one of the two modes.

    In exact mode ``seeds[s]**2 == values[s]`` for every seeded symbol.
    Approx mode stores mpf values created at ``precision`` decimal digits and
    uses principal square roots for half-integer powers.
    """

    mode: str
    values: dict
    seeds: dict = field(default_factory=dict)
    precision: int | None = None
    _pow_cache: dict = field(default_factory=dict, repr=False, compare=False)
    _poch_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def exact(cls, seeds: Mapping[str, Rational] | None = None,
              values: Mapping[str, Rational] | None = None) -> "Binding":
        vals, sds = {}, {}
        for s, v in (seeds or {}).items():
            sds[s] = mpq(as_fraction(v))
            vals[s] = sds[s] * sds[s]
        for s, v in (values or {}).items():
            if s in vals:
                raise ValueError(f"{s} bound twice")
            vals[s] = mpq(as_fraction(v))
        return cls("exact", vals, sds)

    @classmethod
    def approx(cls, values: Mapping[str, object], precision: int = 60) -> "Binding":
        if precision < 30:
            raise ValueError("approx precision must be at least 30 digits")
        with mpmath.workdps(precision):
            vals = {s: to_mpf(v) for s, v in values.items()}
            sds = {s: mpmath.sqrt(v) for s, v in vals.items() if v >= 0}
        return cls("approx", vals, sds, precision)

    @property
    def exact_mode(self) -> bool:
        return self.mode == "exact"

    def const(self, c):
        if self.mode == "exact":
            return mpq(c) if not isinstance(c, Fraction) else mpq(c.numerator, c.denominator)
        if isinstance(c, Fraction):
            return mpmath.mpf(c.numerator) / c.denominator
        return mpmath.mpf(c)

    def power(self, sym: str, x: Fraction):
        """``sym ** x`` for a rational exponent."""
        key = (sym, x)
        hit = self._pow_cache.get(key)
        if hit is not None:
            return hit
        try:
            v = self.values[sym]
        except KeyError:
            raise MissingBinding(f"symbol {sym!r} is unbound") from None
        if x.denominator == 1:
            e = int(x)
            if e < 0 and v == 0:
                raise Pole(f"{sym}^{e} at {sym}=0")
            out = v ** e
        elif x.denominator == 2:
            seed = self.seeds.get(sym)
            if seed is None:
                raise NonRationalPower(f"{sym}^{x} needs a square-root seed for {sym}")
            h = int(2 * x)
            if h < 0 and seed == 0:
                raise Pole(f"{sym}^{x} at {sym}=0")
            out = seed ** h
        elif self.mode == "approx" and v > 0:
            out = v ** (mpmath.mpf(x.numerator) / x.denominator)
        else:
            raise NonRationalPower(f"{sym}^{x}")
        self._pow_cache[key] = out
        return out

    def describe(self) -> dict:
        """JSON-friendly view: values and, in exact mode, the seeds."""
        if self.mode == "exact":
            return {
                "values": {s: str(v) for s, v in sorted(self.values.items())},
                "seeds": {s: str(v) for s, v in sorted(self.seeds.items())},
            }
        return {"values": {s: mpmath.nstr(v, 20) for s, v in sorted(self.values.items())}}


def to_mpf(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    if type(v).__name__ == "mpq":
        return mpmath.mpf(int(v.numerator)) / int(v.denominator)
    if isinstance(v, float):
        return mpmath.mpf(repr(v))
    return mpmath.mpf(v)


# ---------------------------------------------------------------------------
# shifted factorials
# ---------------------------------------------------------------------------


def poch(x, base, length: int):
    """(x; base)_length with the standard negative-length extension."""
    if length >= 0:
        out = 1 if not _is_mpf(x, base) else mpmath.mpf(1)
        f = x
        for _ in range(length):
            out *= 1 - f
            f *= base
        return out
    if base == 0:
        raise PoleAtExtension(f"({x}; 0)_{length}")
    shifted = x * base ** length
    den = poch(shifted, base, -length)
    if den == 0:
        raise PoleAtExtension(f"({x}; {base})_{length}")
    return 1 / den


def _is_mpf(*xs) -> bool:
    return any(isinstance(x, mpmath.mpf) for x in xs)


def poch_terms_needed(x, base, eps) -> int:
    """Smallest K with the tail bound of (x;base)_inf below eps."""
    ax, ab = abs(x), abs(base)
    if ax == 0 or ab == 0:
        return 1
    K, tail_head = 0, ax
    while True:
        # |log prod_{k>=K} (1 - base^k x)| <= |x||base|^K / (1-|base|) / (1 - |x||base|^K)
        if tail_head < mpmath.mpf("0.5"):
            bound = tail_head / (1 - ab) / (1 - tail_head)
            if bound <= eps:
                return K
        K += 1
        tail_head *= ab


def poch_inf(x, base, eps):
    """(x; base)_infinity to relative accuracy eps, with |base| < 1."""
    if abs(base) >= 1:
        raise DivergentBase(f"(x; {base})_inf needs |base| < 1")
    x = to_mpf(x) if not isinstance(x, (mpmath.mpf, mpmath.mpc)) else x
    base = to_mpf(base) if not isinstance(base, (mpmath.mpf, mpmath.mpc)) else base
    if x == 0:
        return mpmath.mpf(1)
    if base == 0:
        return 1 - x
    K = poch_terms_needed(x, base, eps)
    return poch(x, base, K)
