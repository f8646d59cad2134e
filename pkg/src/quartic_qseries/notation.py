"""A compact text notation for products of shifted factorials.

The catalogs are written in this notation so that every formula can be read
side by side with its typeset source.  Grammar (tokens are separated by
whitespace at bracket depth zero)::

    sum     := ['-'] term (('+' | '-') term)*
    term    := product ['//' product]           numerator // denominator
    product := factor+
    factor  := '(1-' mono ')'                    linear factor
             | '(' args ';' base ')_' len        shifted factorials
             | '[' args ';' base ']_' len        same, several arguments
             | '(' mono ')^' exp                 power of a signed monomial
             | '<' mono '>'                      theta(mono; p)
             | '{' sum '}'                       grouping
             | 'SUM_{' var '<' count '}{' sum '}'
             | NAME ['_' len] '(' args ')'       call of a named formula
             | mono

``base`` is ``q``, ``q^j`` or ``q^j,p`` (the latter gives elliptic factorials)
and ``len`` is a single character, a braced polynomial, or ``inf``.
"""

from __future__ import annotations

import re
from typing import Mapping

from .expr import (
    INF,
    Add,
    Call,
    Const,
    Div,
    EllPoch,
    Expr,
    Function,
    Lin,
    Mono,
    Mul,
    Neg,
    Poch,
    Sum,
    Theta,
    prod,
)
from .scalar import MetaPoly, Monomial

_OPEN = "([{<"
_CLOSE = ")]}>"


def _split_top(text: str, seps: str = " \t\n") -> list[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if depth == 0 and ch in seps:
            if cur:
                out.append("".join(cur))
                cur = []
            continue
        cur.append(ch)
    if depth != 0:
        raise ValueError(f"unbalanced brackets in {text!r}")
    if cur:
        out.append("".join(cur))
    return out


def _split_commas(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return [p for p in parts if p]


def _matching(text: str, start: int) -> int:
    """Index of the bracket closing the one at ``start``."""
    depth = 0
    for i in range(start, len(text)):
        if text[i] in "([{":
            depth += 1
        elif text[i] in ")]}":
            depth -= 1
            if depth == 0:
                return i
    raise ValueError(f"unbalanced brackets in {text!r}")


def _length(tok: str):
    if tok in ("inf", "\\infty", "∞"):
        return INF
    if tok.startswith("{"):
        tok = tok[1:-1]
    return MetaPoly.parse(tok)


def _parse_base(text: str):
    elliptic = False
    parts = [p.strip() for p in text.split(",")]
    if len(parts) == 2 and parts[1] == "p":
        elliptic = True
    elif len(parts) != 1:
        raise ValueError(f"bad factorial base {text!r}")
    base = Monomial.parse(parts[0])
    return base, elliptic


_LEN_TAIL = re.compile(r"_(\{[^{}]*\}|inf|\w)$")


class Parser:
    """Parses notation strings against a table of named formulas."""

    def __init__(self, functions: Mapping[str, Function] | None = None):
        self.functions = dict(functions or {})

    def __call__(self, text: str) -> Expr:
        return self.parse(text)

    def parse(self, text: str) -> Expr:
        toks = _split_top(" ".join(text.split()))
        return self._sum(toks, text)

    def _sum(self, toks, src) -> Expr:
        terms, sign, cur = [], 1, []

        def flush():
            if not cur:
                raise ValueError(f"dangling operator in {src!r}")
            t = self._term(cur, src)
            terms.append(t if sign > 0 else Neg(t))

        for tok in toks:
            if tok in ("+", "-"):
                if cur:
                    flush()
                    cur = []
                elif terms:
                    raise ValueError(f"double operator in {src!r}")
                sign = 1 if tok == "+" else -1
                continue
            cur.append(tok)
        flush()
        return terms[0] if len(terms) == 1 else Add(tuple(terms))

    def _term(self, toks, src) -> Expr:
        if "//" in toks:
            i = toks.index("//")
            if "//" in toks[i + 1:]:
                raise ValueError(f"more than one '//' in {src!r}")
            return Div(self._product(toks[:i], src), self._product(toks[i + 1:], src))
        return self._product(toks, src)

    def _product(self, toks, src) -> Expr:
        if not toks:
            raise ValueError(f"empty product in {src!r}")
        return prod([self._factor(t) for t in toks])

    def _factor(self, tok: str) -> Expr:
        if tok.startswith("{"):
            end = _matching(tok, 0)
            if end != len(tok) - 1:
                raise ValueError(f"junk after group in {tok!r}")
            return self.parse(tok[1:-1])
        if tok.startswith("SUM_{"):
            close = _matching(tok, 4)
            head = tok[5:close]
            var, count = head.split("<", 1)
            body = tok[close + 1:]
            if not (body.startswith("{") and _matching(body, 0) == len(body) - 1):
                raise ValueError(f"bad sum body in {tok!r}")
            return Sum(var.strip(), _length(count.strip()), self.parse(body[1:-1]))
        if tok.startswith("<") and tok.endswith(">"):
            return Theta(Monomial.parse(tok[1:-1]))
        if tok.startswith("(-1)^") or tok[0] not in "([" and not tok[0].isupper():
            return Mono(Monomial.parse(tok))
        if tok[0].isupper():
            return self._call(tok)
        close = _matching(tok, 0)
        inner, rest = tok[1:close], tok[close + 1:]
        if ";" in inner:
            args, base = inner.rsplit(";", 1)
            m = _LEN_TAIL.fullmatch(rest)
            if not m:
                raise ValueError(f"missing factorial length in {tok!r}")
            length = _length(m.group(1))
            b, elliptic = _parse_base(base)
            monos = [Monomial.parse(a) for a in _split_commas(args)]
            if elliptic:
                if length == INF:
                    raise ValueError("elliptic factorials must be finite")
                return prod([EllPoch(x, b, length) for x in monos])
            return prod([Poch(x, b, length) for x in monos])
        if tok[0] == "[":
            raise ValueError(f"square bracket without ';' in {tok!r}")
        if not rest:
            if inner.startswith("1-"):
                return Lin(Monomial.parse(inner[2:]))
            if inner.startswith("1+"):
                return Lin(Monomial.parse("-" + inner[2:]))
            return self.parse(inner)
        if rest.startswith("^"):
            e = rest[1:]
            if e.startswith("{"):
                e = e[1:-1]
            return Mono(Monomial.parse(inner) ** MetaPoly.parse(e))
        raise ValueError(f"cannot parse factor {tok!r}")

    def _call(self, tok: str) -> Expr:
        paren = tok.index("(")
        head, argtxt = tok[:paren], tok[paren:]
        if _matching(argtxt, 0) != len(argtxt) - 1:
            raise ValueError(f"junk after call in {tok!r}")
        count = None
        if "_" in head:
            name, cnt = head.split("_", 1)
            count = _length(cnt)
        else:
            name = head
        try:
            fn = self.functions[name]
        except KeyError:
            raise KeyError(f"unknown formula {name!r} in {tok!r}") from None
        args = tuple(Monomial.parse(a) for a in _split_commas(argtxt[1:-1]))
        if len(args) != len(fn.params):
            raise ValueError(f"{name} expects {len(fn.params)} arguments in {tok!r}")
        if fn.count_var is not None and count is None:
            raise ValueError(f"series {name} needs a count in {tok!r}")
        return Call(fn, args, count)

    def define(self, name: str, params, text: str, count_var: str | None = None) -> Function:
        fn = Function(name, tuple(params), self.parse(text), count_var)
        self.functions[name] = fn
        return fn

    def add(self, fn: Function) -> Function:
        self.functions[fn.name] = fn
        return fn
