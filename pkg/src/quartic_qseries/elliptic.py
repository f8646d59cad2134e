"""Theta functions and elliptic shifted factorials.

theta(x; p) = (x; p)_inf (p/x; p)_inf, so theta(x; 0) = 1 - x and every
elliptic factorial collapses to the ordinary one at p = 0.
"""

from __future__ import annotations

from dataclasses import replace

import mpmath

from .catalog import ELLIPTIC, identity
from .errors import ZeroArgument
from .expr import theta_value
from .identities import (DEFAULT_PRECISION, ELLIPTIC_EPS, IdentityDef, VerificationReport,
                         verify_exact, verify_numeric)
from .scalar import Binding

ELLIPTIC_IDS = ("ell-1", "ell-2", "ell-3")

# basic identity each theorem deforms, with the specialization that makes it
# terminate at k = m
_COUNTERPARTS = {
    "ell-1": ("cor-rahman-y", {"d": "q^{2+m}"}),
    "ell-2": ("cor-rahman-y", {"d": "q^{-2m}"}),
    "ell-3": ("cor-nuova", {}),
}


def basic_counterpart(id_: str) -> IdentityDef:
    """The basic (p = 0) identity an elliptic theorem reduces to, with meta m."""
    base_id, subs = _COUNTERPARTS[id_]
    base = identity(base_id)
    if not subs:
        return base
    free = tuple(s for s in base.free if s not in subs)
    return replace(base, id=f"{base_id}@{id_}", meta=("m",), free=free,
                   subs=dict(base.subs, **subs),
                   domain={k: v for k, v in base.domain.items() if k in free})


def _nome(p):
    p = mpmath.mpf(p)
    if not abs(p) < 1:
        raise ValueError(f"nome must satisfy |p| < 1, got {p}")
    return p


def theta(x, p, eps=ELLIPTIC_EPS):
    """theta(x; p), each infinite product truncated with tail below eps/2."""
    if x == 0:
        raise ZeroArgument("theta(0; p)")
    p = _nome(p)
    if p == 0:
        return 1 - mpmath.mpf(x)
    return theta_value(mpmath.mpf(x), p, mpmath.mpf(eps))


def ell_poch(x, base, p, length: int, eps=ELLIPTIC_EPS):
    """[x; base, p]_length = prod_{i < length} theta(x base^i; p)."""
    if length < 0:
        raise ValueError("elliptic factorial length must be non-negative")
    out = mpmath.mpf(1)
    x, base = mpmath.mpf(x), mpmath.mpf(base)
    each = mpmath.mpf(eps) / max(length, 1)
    for i in range(length):
        out *= theta(x * base ** i, p, each)
    return out


def verify_elliptic(id_: str | IdentityDef, bind: Binding | None = None, p=0, m: int = 0,
                    precision: int = DEFAULT_PRECISION, eps=ELLIPTIC_EPS, *,
                    seed: int = 0) -> VerificationReport:
    """Check one elliptic theorem at nome ``p`` and length ``m``.

    Pass iff |LHS - RHS| < eps max(1, |LHS|, |RHS|).  When the right side is
    the zero branch (ell-1, odd m) the test is |LHS| < eps.
    """
    ident = id_ if isinstance(id_, IdentityDef) else identity(id_)
    if ident.kind != ELLIPTIC:
        raise ValueError(f"{ident.id} is not an elliptic identity")
    if m < 0:
        raise ValueError("m must be non-negative")
    p = _nome(p)
    if bind is not None and bind.exact_mode:
        if p != 0:
            raise ValueError("exact bindings only evaluate at p = 0")
        return verify_exact(ident, bind, m=m)
    rep = verify_numeric(ident, bind, precision, eps, m=m, p=p if p else None, seed=seed)
    rep.mode = "elliptic"
    rep.p = p
    return rep
