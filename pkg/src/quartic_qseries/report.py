"""Serialization of verification records (JSON and a fixed-width table).

Residuals and side values are written as strings: exact rationals as
``num/den`` and approximate values as decimal strings at working precision.
Nothing time-dependent is emitted unless timings were requested.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

import mpmath

from . import __version__
from .identities import PASS, VerificationReport

SCHEMA_VERSION = "1"


def value_str(v, digits: int) -> str | None:
    if v is None:
        return None
    if isinstance(v, mpmath.mpf):
        return mpmath.nstr(v, digits)
    return str(v)


def _detail(r: VerificationReport, digits: int):
    if r.status == PASS:
        return None
    out = {"error": r.message or r.status}
    if r.lhs is not None:
        out["lhs"] = value_str(r.lhs, digits)
        out["rhs"] = value_str(r.rhs, digits)
        out["anchor"] = r.anchor
    return out


def record(r: VerificationReport, digits: int = 60) -> dict:
    return {
        "id": r.id,
        "paper_anchor": r.anchor,
        "mode": r.mode,
        "binding": r.binding,
        "n": r.meta.get("n"),
        "m": r.meta.get("m"),
        "delta": r.meta.get("delta"),
        "trial": r.trial,
        "p": None if r.p is None else value_str(mpmath.mpf(r.p), 15),
        "status": r.status,
        "residual": value_str(r.residual, digits),
        "poles_resampled": r.poles_resampled,
        "elapsed_ms": None if r.elapsed_ms is None else round(r.elapsed_ms, 3),
        "detail": _detail(r, digits),
    }


def summary(records: Iterable[VerificationReport]) -> dict:
    records = list(records)
    ok = sum(r.status == PASS for r in records)
    return {"pass": ok, "fail": len(records) - ok,
            "resampled": sum(r.poles_resampled > 0 for r in records)}


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def to_json(records: Sequence[VerificationReport], config: dict, digits: int = 60) -> str:
    if not records:
        raise ValueError("refusing to emit an empty report")
    return _dump({
        "schema_version": SCHEMA_VERSION,
        "artifact_version": __version__,
        "config": config,
        "records": [record(r, digits) for r in records],
        "aggregates": aggregate(records, digits),
        "summary": summary(records),
    })


def aggregate(records: Sequence[VerificationReport], digits: int = 60) -> list:
    """One block per identity, in first-seen order; failures carry full records."""
    blocks: dict[str, list] = {}
    for r in records:
        blocks.setdefault(r.id, []).append(r)
    out = []
    for id_, rs in blocks.items():
        s = summary(rs)
        out.append({
            "id": id_,
            "paper_anchor": rs[0].anchor,
            "mode": rs[0].mode,
            "instances": len(rs),
            **s,
            "max_poles_resampled": max(r.poles_resampled for r in rs),
            "failures": [record(r, digits) for r in rs if r.status != PASS],
        })
    return out


def sweep_json(records: Sequence[VerificationReport], config: dict, digits: int = 60) -> str:
    if not records:
        raise ValueError("refusing to emit an empty report")
    return _dump({
        "schema_version": SCHEMA_VERSION,
        "artifact_version": __version__,
        "config": config,
        "aggregates": aggregate(records, digits),
        "summary": summary(records),
    })


_COLS = (("id", 22), ("mode", 8), ("trial", 5), ("n", 3), ("m", 3), ("delta", 5),
         ("status", 8), ("poles", 5), ("residual", 24))


def _cell(v, width: int) -> str:
    s = "-" if v is None else str(v)
    if len(s) > width:
        s = s[:width - 1] + "~"
    return s.ljust(width)


def to_text(records: Sequence[VerificationReport], digits: int = 60) -> str:
    if not records:
        raise ValueError("refusing to emit an empty report")
    lines = [" ".join(_cell(name, w) for name, w in _COLS).rstrip()]
    lines.append(" ".join("-" * w for _, w in _COLS))
    for r in records:
        res = value_str(r.residual, 6) if r.residual is not None else None
        row = (r.id, r.mode, r.trial, r.meta.get("n"), r.meta.get("m"), r.meta.get("delta"),
               r.status, r.poles_resampled, res)
        lines.append(" ".join(_cell(v, w) for v, (_, w) in zip(row, _COLS)).rstrip())
        if r.status != PASS:
            d = _detail(r, digits)
            lines.append(f"    {d['error']}: binding={json.dumps(r.binding, sort_keys=True)}")
            if "lhs" in d:
                lines.append(f"    lhs={d['lhs']}")
                lines.append(f"    rhs={d['rhs']}")
    s = summary(records)
    lines.append(f"pass={s['pass']} fail={s['fail']} resampled={s['resampled']}")
    return "\n".join(lines) + "\n"


def sweep_text(records: Sequence[VerificationReport], digits: int = 60) -> str:
    if not records:
        raise ValueError("refusing to emit an empty report")
    cols = (("id", 22), ("mode", 8), ("instances", 9), ("pass", 6), ("fail", 6), ("resampled", 9))
    lines = [" ".join(_cell(n, w) for n, w in cols).rstrip(), " ".join("-" * w for _, w in cols)]
    for b in aggregate(records, digits):
        row = (b["id"], b["mode"], b["instances"], b["pass"], b["fail"], b["resampled"])
        lines.append(" ".join(_cell(v, w) for v, (_, w) in zip(row, cols)).rstrip())
        for f in b["failures"]:
            lines.append(f"    {f['status']} n={f['n']} m={f['m']} delta={f['delta']} "
                         f"trial={f['trial']} binding={json.dumps(f['binding'], sort_keys=True)}")
    s = summary(records)
    lines.append(f"pass={s['pass']} fail={s['fail']} resampled={s['resampled']}")
    return "\n".join(lines) + "\n"
