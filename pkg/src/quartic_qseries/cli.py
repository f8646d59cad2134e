"""Command line front end: ``qseries verify``, ``qseries sweep``, ``qseries --list``.

Exit codes: 0 when every verification passed, 1 on any fail / no_decay /
unresolved pole, 2 on usage errors (including unknown identity ids).
"""

from __future__ import annotations

import argparse
import difflib
import fnmatch
import os
import sys
from typing import Sequence

import mpmath

from . import __version__
from .catalog import IdentityDef, registry
from .identities import (DEFAULT_EPS, DEFAULT_PRECISION, ELLIPTIC_EPS, check_mode,
                         default_mode, sweep)
from .report import sweep_json, sweep_text, to_json, to_text

MODES = ("auto", "exact", "numeric", "elliptic")
DEFAULT_P = "0.05"


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qseries", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("--list", action="store_true", help="print the identity catalog and exit")
    sub = ap.add_subparsers(dest="command")
    sub.add_parser("list", help="print the identity catalog")
    for name, trials, seed_required in (("verify", 3, False), ("sweep", 25, True)):
        sp = sub.add_parser(name)
        sp.add_argument("--id", required=True,
                        help='identity id, comma list, glob pattern, or "all"')
        sp.add_argument("--mode", choices=MODES, default="auto")
        sp.add_argument("--trials", type=int, default=trials)
        sp.add_argument("--seed", type=int, required=seed_required,
                        default=None if seed_required else 0)
        sp.add_argument("--nmax", type=int, default=4)
        sp.add_argument("--mmax", type=int, default=4)
        sp.add_argument("--delta", type=int, choices=(0, 1), default=None)
        sp.add_argument("--precision", type=int, default=None,
                        help="working digits (default $QSERIES_PRECISION or 60)")
        sp.add_argument("--eps", default=None,
                        help="tolerance (default 1e-30, elliptic 1e-25)")
        sp.add_argument("--p", default=None, help=f"elliptic nome (default {DEFAULT_P})")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--output", default=None, help="write the report here instead of stdout")
        sp.add_argument("--timings", action="store_true", help="include elapsed_ms")
    return ap


def _select(selector: str, catalog: Sequence[IdentityDef], mode: str) -> list:
    by_id = {i.id: i for i in catalog}
    if selector == "all":
        chosen = list(catalog)
        if mode != "auto":
            chosen = [i for i in chosen if _compatible(i, mode)]
    else:
        chosen, seen = [], set()
        for part in (s.strip() for s in selector.split(",")):
            if not part:
                continue
            if any(ch in part for ch in "*?["):
                hits = [i for i in catalog if fnmatch.fnmatchcase(i.id, part)]
            elif part in by_id:
                hits = [by_id[part]]
            else:
                near = difflib.get_close_matches(part, list(by_id), n=3, cutoff=0.5)
                hint = f"; nearest: {', '.join(near)}" if near else ""
                raise UsageError(f"unknown identity {part!r}{hint}")
            for i in hits:
                if i.id not in seen:
                    seen.add(i.id)
                    chosen.append(i)
        # keep catalog order regardless of how the selector was written
        order = {i.id: k for k, i in enumerate(catalog)}
        chosen.sort(key=lambda i: order[i.id])
        for i in chosen:
            try:
                check_mode(i, mode)
            except ValueError as e:
                raise UsageError(str(e)) from None
    if not chosen:
        raise UsageError(f"selector {selector!r} matches no identity")
    return chosen


def _compatible(ident: IdentityDef, mode: str) -> bool:
    try:
        check_mode(ident, mode)
    except ValueError:
        return False
    return True


def _precision(arg) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("QSERIES_PRECISION")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"QSERIES_PRECISION must be an integer, got {env!r}") from None
    return DEFAULT_PRECISION


def _mpf(text, name):
    try:
        return mpmath.mpf(text)
    except (ValueError, TypeError):
        raise UsageError(f"{name} must be a number, got {text!r}") from None


def list_catalog(catalog: Sequence[IdentityDef]) -> str:
    lines = [f"{'id':<22} {'kind':<24} {'meta':<10} anchor"]
    for i in catalog:
        meta = ",".join(i.meta) or "-"
        lines.append(f"{i.id:<22} {i.kind:<24} {meta:<10} {i.anchor}")
    return "\n".join(lines) + "\n"


def _run(args, catalog) -> tuple:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if args.nmax < 0 or args.mmax < 0:
        raise UsageError("--nmax and --mmax must be non-negative")
    prec = _precision(args.precision)
    if prec < 30:
        raise UsageError("precision must be at least 30 digits")
    chosen = _select(args.id, catalog, args.mode)
    modes = {default_mode(i) if args.mode == "auto" else args.mode for i in chosen}
    eps = _mpf(args.eps, "--eps") if args.eps is not None else None
    p = _mpf(args.p if args.p is not None else DEFAULT_P, "--p")
    if not 0 <= p < 1:
        raise UsageError("--p must lie in [0, 1)")
    with mpmath.workdps(prec):
        for md in modes - {"exact"}:
            tol = eps if eps is not None else (ELLIPTIC_EPS if md == "elliptic" else DEFAULT_EPS)
            if not 0 < tol < 1:
                raise UsageError("--eps must lie in (0, 1)")
            if prec < 2 * -mpmath.log10(tol):
                raise UsageError(f"precision {prec} is below 2*(-log10 eps) for eps={mpmath.nstr(tol, 3)}")
        records = sweep(chosen, trials=args.trials, seed=args.seed, nmax=args.nmax,
                        mmax=args.mmax, delta=args.delta, mode=args.mode, precision=prec,
                        eps=eps, p=p, timings=args.timings)
    config = {
        "command": args.command,
        "id": args.id,
        "mode": args.mode,
        "trials": args.trials,
        "seed": args.seed,
        "nmax": args.nmax,
        "mmax": args.mmax,
        "delta": args.delta,
        "precision": prec,
        "eps": None if eps is None else mpmath.nstr(eps, 15),
        "p": mpmath.nstr(p, 15),
        "timings": args.timings,
    }
    return records, config, prec


def main(argv: Sequence[str] | None = None, catalog: Sequence[IdentityDef] | None = None) -> int:
    """Entry point; ``catalog`` replaces the builtin registry (test fixtures)."""
    catalog = list(catalog) if catalog is not None else registry()
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    out = sys.stdout
    if args.list or args.command == "list":
        out.write(list_catalog(catalog))
        return 0
    if args.command is None:
        ap.print_usage(sys.stderr)
        return 2
    try:
        records, config, prec = _run(args, catalog)
    except UsageError as e:
        print(f"qseries: error: {e}", file=sys.stderr)
        return 2
    if args.command == "sweep":
        text = sweep_json(records, config, prec) if args.format == "json" else sweep_text(records, prec)
    else:
        text = to_json(records, config, prec) if args.format == "json" else to_text(records, prec)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as e:
            print(f"qseries: error: cannot write {args.output}: {e}", file=sys.stderr)
            return 2
    else:
        out.write(text)
    return 0 if all(r.ok for r in records) else 1


if __name__ == "__main__":
    sys.exit(main())
