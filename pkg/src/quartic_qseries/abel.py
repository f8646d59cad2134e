"""Modified Abel lemma: generic check and the per-pair sub-checks.

Lemma, for sequences A_{-1..n-1} and B_{0..n}::

    sum_{k<n} B_k (A_k - A_{k-1}) = A_{n-1} B_n - A_{-1} B_0 - sum_{k<n} A_k (B_{k+1} - B_k)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .expr import Function, Scope, resolve_monomial
from .pairs import AbelPair
from .scalar import Binding, Monomial


def lemma_sides(A: Sequence, B: Sequence, n: int):
    """Both sides of the lemma; ``A[i]`` holds A_{i-1} and ``B[i]`` holds B_i."""
    if len(A) < n + 1 or len(B) < n + 1:
        raise ValueError("A needs indices -1..n-1 and B needs 0..n")

    def a(k):
        return A[k + 1]

    lhs = sum((B[k] * (a(k) - a(k - 1)) for k in range(n)), 0)
    rhs = a(n - 1) * B[n] - a(-1) * B[0] - sum((a(k) * (B[k + 1] - B[k]) for k in range(n)), 0)
    return lhs, rhs


def check_lemma(A: Sequence, B: Sequence, n: int) -> bool:
    lhs, rhs = lemma_sides(A, B, n)
    return lhs == rhs


@dataclass
class SubCheck:
    name: str
    k: int | None
    ok: bool
    lhs: object
    rhs: object


@dataclass
class PairReport:
    pair: str
    n: int
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def by_name(self, name):
        return [c for c in self.checks if c.name == name]


def _scope(bind: Binding, **meta) -> Scope:
    return Scope(bind, meta)


def call_at(fn: Function, args, sc: Scope, **meta):
    """Evaluate ``fn`` at ``args`` (resolved in ``sc``) with ``meta`` overriding."""
    subs = {p: resolve_monomial(Monomial.parse(a), sc) for p, a in zip(fn.params, args)}
    inner = dict(sc.meta)
    inner.update(meta)
    return fn.body.ev(sc.child(meta=inner, subs=subs))


def _at(fn: Function, bind: Binding, **meta):
    return fn.body.ev(_scope(bind, **meta))


def check_pair(p: AbelPair, bind: Binding, n: int) -> PairReport:
    """Sub-checks (i) to (v) for one pair at one binding, exactly."""
    rep = PairReport(p.name, n)
    A = {k: _at(p["A"], bind, k=k, n=n) for k in range(-1, n)}
    B = {k: _at(p["B"], bind, k=k, n=n) for k in range(0, n + 1)}
    for k in range(n):
        direct = A[k] - A[k - 1]
        rep.checks.append(SubCheck("nabla_A", k, direct == (c := _at(p["NA"], bind, k=k, n=n)), direct, c))
    for k in range(n):
        direct = B[k + 1] - B[k]
        rep.checks.append(SubCheck("delta_B", k, direct == (c := _at(p["DB"], bind, k=k, n=n)), direct, c))
    varpi = A[-1] * B[0]
    w = _at(p["W"], bind, n=n)
    rep.checks.append(SubCheck("varpi", None, varpi == w, varpi, w))
    r_direct = A[n - 1] * B[n] / varpi
    r_closed = _at(p["R"], bind, n=n)
    rep.checks.append(SubCheck("R", None, r_direct == r_closed, r_direct, r_closed))
    sc = _scope(bind, n=n)
    lhs = sum((B[k] * (A[k] - A[k - 1]) for k in range(n)), bind.const(0))
    series = p.prefactor.ev(sc) * _series_value(p, bind, n)
    rep.checks.append(SubCheck("sum_B_nabla_A", None, lhs == series, lhs, series))
    tail = -sum((A[k] * (B[k + 1] - B[k]) for k in range(n)), bind.const(0))
    shifted = p.shifted.ev(sc)
    rep.checks.append(SubCheck("sum_A_delta_B", None, tail == shifted, tail, shifted))
    return rep


def _series_value(p: AbelPair, bind: Binding, n: int):
    from .pairs import base_parser

    P = base_parser()
    return P(f"{p.series}_n({','.join(p.params)})").ev(_scope(bind, n=n))


@dataclass
class SplitReport:
    pair: str
    k: int
    n: int
    direct: object
    closed: object
    forms: list

    @property
    def ok(self) -> bool:
        return self.direct == self.closed and all(f == self.direct for f in self.forms)


def check_r_split(p: AbelPair, k: int, n: int, bind: Binding) -> SplitReport:
    """R at the k-shifted parameters against the separated displays."""
    sc = _scope(bind, k=k, n=n)
    a_last = call_at(p["A"], p.r_shift, sc, k=n - 1)
    b_last = call_at(p["B"], p.r_shift, sc, k=n)
    a_first = call_at(p["A"], p.r_shift, sc, k=-1)
    b_first = call_at(p["B"], p.r_shift, sc, k=0)
    direct = a_last * b_last / (a_first * b_first)
    closed = call_at(p["R"], p.r_shift, sc)
    forms = [f.ev(sc) for f in p.r_split]
    return SplitReport(p.name, k, n, direct, closed, forms)


@dataclass
class CompositionReport:
    pair: str
    n: int
    m: int
    coefficient: tuple      # (composed, displayed)
    offset: tuple           # (composed, displayed)

    @property
    def ok(self) -> bool:
        return self.coefficient[0] == self.coefficient[1] and self.offset[0] == self.offset[1]


def compose_recurrence(p: AbelPair, bind: Binding, n: int, m: int) -> CompositionReport:
    """Apply S(a) = X(a) S(sigma a) + Z(a) m times and compare with C and Y.

    After m steps the coefficient of S(sigma^m a) is prod_{j<m} X(sigma^j a)
    and the offset is sum_{j<m} prod_{i<j} X(sigma^i a) Z(sigma^j a).
    """
    sc = _scope(bind, n=n, m=m)
    coeff = bind.const(1)
    offset = bind.const(0)
    for j in range(m):
        at = sc.with_meta(j=j)
        offset = offset + coeff * call_at(p["Z"], p.sigma, at)
        coeff = coeff * call_at(p["X"], p.sigma, at)
    c_disp = p["C"].body.ev(sc)
    y_disp = p["Y"].body.ev(sc)
    return CompositionReport(p.name, n, m, (coeff, c_disp), (offset, y_disp))
