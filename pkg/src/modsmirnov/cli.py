"""Command line front end: ``modsmirnov {list,verify,sharpness,reduce,eval}``.

Exit codes: 0 all checks pass, 1 counterexample or mismatch found, 2 usage or
config error, 3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import smirnov as sm
from .catalog import LINKS, REGISTRY, list_entries, list_links, reduction_check, sharpness_scan
from .circle import TolValueUnreachable
from .polynomial import ComplexPolynomial
from .roots import Unconverged

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
SHARP_GAP = 1e-6


class UsageError(Exception):
    pass


def _complex_arg(text: str) -> complex:
    """``RE,IM`` or a single real number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]))
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")


def _load_poly(text: str) -> ComplexPolynomial:
    """A ``[[re, im], ...]`` literal, or a path to a JSON file holding one."""
    src = text.strip()
    if not src.startswith("["):
        path = Path(src)
        if not path.is_file():
            raise UsageError(f"--poly: no such file and not a literal: {text!r}")
        src = path.read_text(encoding="utf-8")
    try:
        data = json.loads(src)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--poly: invalid JSON ({exc})") from None
    if isinstance(data, dict):
        data = data.get("p", data.get("coeffs"))
    try:
        return ComplexPolynomial.from_pairs(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"--poly: {exc}") from None


def _entries_arg(values: list[str]) -> tuple[str, ...]:
    out: list[str] = []
    for v in values:
        for name in v.split(","):
            if name == "all":
                out.extend(REGISTRY)
            elif name in REGISTRY:
                out.append(name)
            else:
                raise UsageError(f"unknown inequality id {name!r} (see `list`)")
    return tuple(dict.fromkeys(out))


def _cmd_list(args) -> int:
    if args.json:
        print(json.dumps({"entries": list_entries(), "links": list_links()}, indent=2))
        return EXIT_OK
    for e in list_entries():
        tag = " [diagnostic]" if e["diagnostic"] else ""
        print(f"{e['id']:24s} {e['direction']:2s} {e['hypothesis']:24s} {e['citation']}{tag}")
    if args.links:
        print()
        for l in list_links():
            print(f"{l['id']:28s} {l['source']} -> {l['target']} ({l['kind']}): {l['description']}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    from .harness.campaign import CampaignConfig, run_campaign
    from .harness.reports import load_config, to_json, write_csv

    if args.config:
        try:
            raw = load_config(args.config)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"--config: {exc}") from None
    else:
        raw = {"schema": 1}
    if args.ineq:
        raw["entries"] = list(_entries_arg(args.ineq))
    elif "entries" not in raw and "entry" not in raw:
        raise UsageError("verify needs --ineq or a config naming entries")
    for key, val in (("trials", args.trials), ("seed", args.seed),
                     ("param_law", args.param_law), ("reduction_trials", args.reduction_trials)):
        if val is not None:
            raw[key] = val
    deg = list(raw.get("degree_range", [1, 12]))
    if args.degree_min is not None:
        deg[0] = args.degree_min
    if args.degree_max is not None:
        deg[1] = args.degree_max
    raw["degree_range"] = deg
    if args.tol is not None:
        raw.setdefault("tolerances", {})["extrema"] = args.tol
    if args.sharpness:
        raw["sharpness"] = True
    if args.reductions:
        raw["reductions"] = True
    if args.csv:
        raw["record_trials"] = True
    try:
        config = CampaignConfig.from_dict(raw)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"config: {exc}") from None

    report = run_campaign(config, timed=args.timed)
    text = to_json(report)
    out = args.out or config.output
    if out:
        Path(out).write_text(text, encoding="utf-8")
    elif not args.quiet:
        sys.stdout.write(text)
    if args.csv:
        write_csv(report, args.csv)
    for e in report.entries:
        state = "PASS" if e.ok else "FAIL"
        if e.diagnostic:
            state += " (diagnostic)"
        print(f"{e.entry:24s} {state:18s} passes={e.passes} failures={e.failures} "
              f"regenerations={e.regenerations} errors={e.errors} min_slack={e.min_slack}",
              file=sys.stderr)
    if report.failures:
        return EXIT_FAIL
    if report.errors:
        return EXIT_NUMERIC
    return EXIT_OK


def _cmd_sharpness(args) -> int:
    ids = _entries_arg(args.ineq)
    failed = False
    results = []
    for eid in ids:
        if REGISTRY[eid].sharp_family is None:
            if len(ids) == 1:
                raise UsageError(f"{eid} has no extremal family")
            continue
        scan = sharpness_scan(eid, n=args.n)
        d = scan.to_dict()
        d["sharp"] = scan.gap <= SHARP_GAP
        results.append(d)
        failed |= scan.failures > 0
        print(f"{eid:24s} family={scan.family!r} gap={scan.gap:.3e} "
              f"{'sharp' if d['sharp'] else 'not attained on grid'}", file=sys.stderr)
    print(json.dumps(results, indent=2, sort_keys=True))
    return EXIT_FAIL if failed else EXIT_OK


def _cmd_reduce(args) -> int:
    ids = list(LINKS) if args.link == "all" else args.link.split(",")
    for lid in ids:
        if lid not in LINKS:
            raise UsageError(f"unknown link {lid!r} (see `list --links`)")
    results = [reduction_check(lid, trials=args.trials, seed=args.seed,
                               degree_range=(args.degree_min, args.degree_max),
                               raise_on_mismatch=False) for lid in ids]
    for r in results:
        print(f"{r.link:28s} {'PASS' if r.passed else 'FAIL'} max_rel_diff={r.max_rel_diff:.3e}"
              + (f" min_order={r.min_order:.3f}" if r.min_order is not None else ""),
              file=sys.stderr)
    print(json.dumps([r.to_dict() for r in results], indent=2, sort_keys=True))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _cmd_eval(args) -> int:
    p = _load_poly(args.poly)
    n = args.n if args.n is not None else max(p.degree, 0)
    if n < p.degree:
        raise UsageError(f"--n {n} is below deg P = {p.degree}")
    if args.op == "smirnov":
        q = sm.modified_smirnov(p, args.a, n)
    elif args.op == "smirnov-alpha":
        q = sm.smirnov_alpha(p, args.alpha, n)
    else:
        if args.R < 1:
            raise UsageError("--R must be >= 1")
        q = sm.composite_transform(p, args.a, args.alpha, args.beta, args.R, n)
    out = {"op": args.op, "n": n, "coeffs": q.to_pairs()}
    if args.at is not None:
        v = q(args.at)
        out["value"] = [v.real, v.imag]
        out["modulus"] = abs(v)
    print(json.dumps(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="modsmirnov",
                                 description="Numerical checks of modified Smirnov operator inequalities.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="dump the inequality registry")
    p.add_argument("--json", action="store_true")
    p.add_argument("--links", action="store_true", help="also list reduction links")
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("verify", help="randomized campaign over registry entries")
    p.add_argument("--ineq", action="append", help="entry id, comma list, or 'all'")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--degree-min", type=int)
    p.add_argument("--degree-max", type=int)
    p.add_argument("--tol", type=float, help="extrema certificate tolerance")
    p.add_argument("--param-law", choices=("uniform", "boundary"))
    p.add_argument("--sharpness", action="store_true")
    p.add_argument("--reductions", action="store_true")
    p.add_argument("--reduction-trials", type=int)
    p.add_argument("--config", help="JSON campaign config")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.add_argument("--csv", help="also write one CSV row per trial")
    p.add_argument("--timed", action="store_true", help="include wall time in the report")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sharpness", help="slack on the entry's extremal family")
    p.add_argument("--ineq", action="append", required=True)
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(func=_cmd_sharpness)

    p = sub.add_parser("reduce", help="check a reduction link")
    p.add_argument("--link", required=True, help="link id, comma list, or 'all'")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degree-min", type=int, default=1)
    p.add_argument("--degree-max", type=int, default=12)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("eval", help="apply an operator to one polynomial")
    p.add_argument("--poly", required=True, help="[[re,im],...] literal or JSON file")
    p.add_argument("--op", choices=("smirnov", "smirnov-alpha", "composite"), default="smirnov")
    p.add_argument("--a", type=_complex_arg, default=0j)
    p.add_argument("--alpha", type=_complex_arg, default=0j)
    p.add_argument("--beta", type=_complex_arg, default=0j)
    p.add_argument("--R", type=float, default=1.0)
    p.add_argument("--n", type=int, help="degree class (default deg P)")
    p.add_argument("--at", type=_complex_arg, help="also evaluate the result at this point")
    p.set_defaults(func=_cmd_eval)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Unconverged, TolValueUnreachable) as exc:
        print(f"numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
