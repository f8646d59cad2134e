"""Verification drivers for the identity registry.

Each check evaluates both sides of a catalog entry under one binding and one
choice of meta values.  Exact checks demand a zero difference.  Approximate
checks (basic numeric and elliptic) compare against a relative tolerance.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import mpmath

from .catalog import ELLIPTIC, EXACT, NUMERIC, IDENTITY_IDS, IdentityDef, identity, registry
from .errors import NoDecay, Pole, ZeroArgument
from .expr import evaluate
from .scalar import Binding

__all__ = [
    "IDENTITY_IDS", "IdentityDef", "identity", "registry",
    "VerificationReport", "Instance", "check", "verify_exact", "verify_numeric",
    "run_instance", "instances", "sweep", "sample_exact", "sample_approx",
    "DEFAULT_PRECISION", "DEFAULT_EPS", "ELLIPTIC_EPS", "GUARD_DIGITS", "MAX_RETRIES",
]

DEFAULT_PRECISION = 60
DEFAULT_EPS = mpmath.mpf("1e-30")
ELLIPTIC_EPS = mpmath.mpf("1e-25")
MAX_RETRIES = 50
SEED_MAX = 40
# truncation of sums and products is tighter than the acceptance tolerance so
# that accumulated truncation error cannot eat the pass margin
GUARD_DIGITS = 6

PASS, FAIL, NO_DECAY, POLE = "pass", "fail", "no_decay", "pole"


@dataclass
class VerificationReport:
    id: str
    anchor: str
    mode: str
    binding: dict
    meta: dict
    status: str
    residual: object = None
    lhs: object = None
    rhs: object = None
    poles_resampled: int = 0
    elapsed_ms: float | None = None
    p: object = None
    message: str = ""
    trial: int | None = None

    @property
    def ok(self) -> bool:
        return self.status == PASS


@dataclass(frozen=True)
class Instance:
    """One scheduled verification: identity, meta values and a trial index."""

    ident: IdentityDef
    meta: Mapping[str, int]
    trial: int = 0


# ---------------------------------------------------------------------------
# binding samplers
# ---------------------------------------------------------------------------


def _seed(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, SEED_MAX), rng.randint(1, SEED_MAX))


def sample_exact(ident: IdentityDef, rng: random.Random) -> Binding:
    """Square-root seeds p/r with 1 <= p, r <= 40; q != 1."""
    seeds = {}
    for s in ident.free:
        x = _seed(rng)
        while s == "q" and x == 1:
            x = _seed(rng)
        seeds[s] = x
    return Binding.exact(seeds=seeds)


_Q_BOX = (Fraction(1, 5), Fraction(7, 10))
_PARAM_BOX = (Fraction(1, 10), Fraction(9, 10))
_GRID = 10 ** 6


def _uniform(rng: random.Random, box) -> Fraction:
    lo, hi = (Fraction(str(x)) if isinstance(x, float) else Fraction(x) for x in box)
    return lo + (hi - lo) * Fraction(rng.randint(0, _GRID), _GRID)


def sample_approx(ident: IdentityDef, rng: random.Random, precision: int) -> Binding:
    """q in [0.2, 0.7]; other parameters from the identity's sampling box.

    Values sit on a 1e-6 grid inside each box so a record's binding reproduces
    the instance exactly.
    """
    vals = {}
    for s in ident.free:
        box = _Q_BOX if s == "q" else ident.domain.get(s, _PARAM_BOX)
        vals[s] = _uniform(rng, box)
    return Binding.approx(vals, precision=precision)


# ---------------------------------------------------------------------------
# single checks
# ---------------------------------------------------------------------------


def check(ident: IdentityDef, bind: Binding, meta: Mapping[str, int], *,
          p=None, eps=None) -> tuple:
    """Evaluate both sides; return ``(passed, lhs, rhs, residual)``.

    Raises Pole / NoDecay from the evaluator.  In approx mode ``eps`` is the
    acceptance tolerance and must be set by the caller's precision context.
    """
    meta = dict(meta)
    if bind.exact_mode:
        if p:
            raise ValueError("exact mode only supports p = 0")
        lhs = evaluate(ident.lhs, bind, meta, ident.subs)
        rhs = evaluate(ident.rhs, bind, meta, ident.subs)
        res = lhs - rhs
        return res == 0, lhs, rhs, res
    tol = mpmath.mpf(eps)
    inner = tol * mpmath.mpf(10) ** (-GUARD_DIGITS)
    pp = mpmath.mpf(p) if p else None
    lhs = evaluate(ident.lhs, bind, meta, ident.subs, p=pp, eps=inner)
    rhs = evaluate(ident.rhs, bind, meta, ident.subs, p=pp, eps=inner)
    res = abs(lhs - rhs)
    if rhs == 0:
        # vanishing branch (odd parity): absolute smallness of the sum
        return res < tol, lhs, rhs, res
    scale = max(1, abs(lhs))
    if ident.kind == ELLIPTIC:
        scale = max(scale, abs(rhs))
    return res < tol * scale, lhs, rhs, res


def run_instance(ident: IdentityDef, meta: Mapping[str, int], rng: random.Random, *,
                 mode: str, precision: int = DEFAULT_PRECISION, eps=None, p=None,
                 retries: int = MAX_RETRIES, timings: bool = False,
                 trial: int | None = None) -> VerificationReport:
    """Sample a binding, resample on poles, and check one instance."""
    if mode == "exact" and p:
        raise ValueError("exact mode only supports p = 0")
    if mode != "exact" and eps is None:
        eps = ELLIPTIC_EPS if p else DEFAULT_EPS
    t0 = time.perf_counter()
    poles = 0
    last = ""
    with mpmath.workdps(precision):
        for _ in range(retries + 1):
            bind = sample_exact(ident, rng) if mode == "exact" else sample_approx(ident, rng, precision)
            try:
                ok, lhs, rhs, res = check(ident, bind, meta, p=p, eps=eps)
            except (Pole, ZeroArgument, ZeroDivisionError) as e:
                poles += 1
                last = str(e)
                continue
            except NoDecay as e:
                return _report(ident, mode, bind, meta, NO_DECAY, poles, t0, timings, p,
                               trial, message=f"NoDecay: {e}")
            status = PASS if ok else FAIL
            msg = "" if ok else "Mismatch"
            return _report(ident, mode, bind, meta, status, poles, t0, timings, p, trial,
                           residual=res, lhs=lhs, rhs=rhs, message=msg)
    return _report(ident, mode, None, meta, POLE, poles, t0, timings, p, trial,
                   message=f"pole on every sample ({retries + 1}); last: {last}")


def _report(ident, mode, bind, meta, status, poles, t0, timings, p, trial, **kw):
    return VerificationReport(
        id=ident.id, anchor=ident.anchor, mode=mode,
        binding=bind.describe() if bind is not None else {},
        meta=dict(meta), status=status, poles_resampled=poles,
        elapsed_ms=(time.perf_counter() - t0) * 1000 if timings else None,
        p=p, trial=trial, **kw)


def _rng(seed, ident_id, trial, meta) -> random.Random:
    tag = ":".join(f"{k}={meta[k]}" for k in sorted(meta))
    return random.Random(f"{seed}:{ident_id}:{trial}:{tag}")


def _require(ident: IdentityDef, kinds: Iterable[str]):
    if ident.kind not in kinds:
        raise ValueError(f"{ident.id} is {ident.kind}")


def verify_exact(id_: str | IdentityDef, bind: Binding | None = None, n: int | None = None,
                 m: int | None = None, delta: int | None = None, *, seed: int = 0,
                 retries: int = MAX_RETRIES) -> VerificationReport:
    """Exact check of a terminating identity (elliptic entries run at p = 0).

    With an explicit binding no resampling happens; a Pole propagates.
    """
    ident = id_ if isinstance(id_, IdentityDef) else identity(id_)
    _require(ident, (EXACT, ELLIPTIC))
    meta = _meta(ident, n=n, m=m, delta=delta)
    if bind is None:
        return run_instance(ident, meta, _rng(seed, ident.id, 0, meta), mode="exact",
                            retries=retries)
    if not bind.exact_mode:
        raise ValueError("verify_exact needs an exact binding")
    ok, lhs, rhs, res = check(ident, bind, meta)
    return VerificationReport(ident.id, ident.anchor, "exact", bind.describe(), meta,
                              PASS if ok else FAIL, res, lhs, rhs,
                              message="" if ok else "Mismatch")


def verify_numeric(id_: str | IdentityDef, bind: Binding | None = None,
                   precision: int = DEFAULT_PRECISION, eps=DEFAULT_EPS, *,
                   n: int | None = None, m: int | None = None, delta: int | None = None,
                   p=None, seed: int = 0) -> VerificationReport:
    """Approximate check: pass iff ``|LHS - RHS| < eps * max(1, |LHS|)``."""
    ident = id_ if isinstance(id_, IdentityDef) else identity(id_)
    eps = mpmath.mpf(eps)
    if precision < 2 * -mpmath.log10(eps):
        raise ValueError("precision must be at least 2 * -log10(eps)")
    meta = _meta(ident, n=n, m=m, delta=delta)
    mode = "elliptic" if p else "numeric"
    if bind is None:
        return run_instance(ident, meta, _rng(seed, ident.id, 0, meta), mode=mode,
                            precision=precision, eps=eps, p=p)
    t0 = time.perf_counter()
    with mpmath.workdps(precision):
        if bind.exact_mode:
            bind = Binding.approx(bind.values, precision=precision)
        try:
            ok, lhs, rhs, res = check(ident, bind, meta, p=p, eps=eps)
        except NoDecay as e:
            return _report(ident, mode, bind, meta, NO_DECAY, 0, t0, False, p, None,
                           message=f"NoDecay: {e}")
    return VerificationReport(ident.id, ident.anchor, mode, bind.describe(), meta,
                              PASS if ok else FAIL, res, lhs, rhs, p=p,
                              message="" if ok else "Mismatch")


def _meta(ident: IdentityDef, **given) -> dict:
    out = {}
    for v in ident.meta:
        x = given.get(v)
        if x is None:
            raise ValueError(f"{ident.id} needs a value for {v}")
        out[v] = int(x)
    return out


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------


def instances(ident: IdentityDef, *, trials: int, nmax: int = 4, mmax: int = 4,
              delta: int | None = None) -> list:
    """All (trial, n, m, delta) combinations for one identity, in report order."""
    caps = {"n": nmax, "m": mmax, "delta": 1}
    grids = [{}]
    for v in ident.meta:
        if v == "delta" and delta is not None:
            vals = [delta]
        else:
            vals = list(ident.meta_range(v, caps[v]))
        grids = [dict(g, **{v: x}) for g in grids for x in vals]
    return [Instance(ident, g, t) for t in range(trials) for g in grids]


def default_mode(ident: IdentityDef) -> str:
    return {EXACT: "exact", NUMERIC: "numeric", ELLIPTIC: "elliptic"}[ident.kind]


def sweep(ids: str | Sequence[str] | Sequence[IdentityDef], *, trials: int, seed: int,
          nmax: int = 4, mmax: int = 4, delta: int | None = None, mode: str = "auto",
          precision: int = DEFAULT_PRECISION, eps=None, p=None,
          timings: bool = False) -> list:
    """Run every instance of every selected identity; deterministic in ``seed``.

    Records come back ordered by catalog position, then trial, n, m, delta.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if isinstance(ids, (str, IdentityDef)):
        ids = [ids]
    idents = [i if isinstance(i, IdentityDef) else identity(i) for i in ids]
    out = []
    for ident in idents:
        md = default_mode(ident) if mode == "auto" else mode
        pp = p
        if md == "elliptic" and pp is None:
            pp = mpmath.mpf("0.05")
        if md != "elliptic":
            pp = None
        for inst in instances(ident, trials=trials, nmax=nmax, mmax=mmax, delta=delta):
            rng = _rng(seed, ident.id, inst.trial, inst.meta)
            out.append(run_instance(ident, inst.meta, rng, mode=md, precision=precision,
                                    eps=eps, p=pp, timings=timings, trial=inst.trial))
    return out


def check_mode(ident: IdentityDef, mode: str):
    """Raise ValueError when ``mode`` cannot be applied to ``ident``."""
    if mode == "auto":
        return
    if mode == "exact" and ident.kind == NUMERIC:
        raise ValueError(f"{ident.id} is nonterminating; exact mode is unavailable")
    if mode == "elliptic" and ident.kind != ELLIPTIC:
        raise ValueError(f"{ident.id} has no elliptic deformation")
