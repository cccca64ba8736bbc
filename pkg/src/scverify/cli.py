"""Command-line interface: ``scverify run | identities | gamma | list-checks``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from .checks import GROUPS, REGISTRY
from .errors import ScverifyError
from .gamma import DEFAULT_BUDGET, gamma_p, gamma_reflection_check
from .identities import IdentityId
from .suite import SuiteConfig, config_from_mapping, emit_report, load_config, run_suite


def _add_output(sp):
    sp.add_argument("--format", choices=("jsonl", "csv"))
    sp.add_argument("--out", help="report file (default: stdout)")
    sp.add_argument("--plot-dir", help="also render figures into this directory")
    sp.add_argument("--jobs", help="worker processes, or 'auto'")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="scverify", description="Verify supercongruences and summation identities.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run checks over a prime range")
    run.add_argument("--config", help="key=value file; flags override it")
    run.add_argument("--checks", help="comma list of ids or groups: " + ", ".join([*GROUPS, "IDENTITIES"]))
    run.add_argument("--primes", help="interval lo:hi")
    run.add_argument("--precision", help="working precision K (p-adic digits)")
    run.add_argument("--n", dest="n_range", help="identity n interval lo:hi")
    run.add_argument("--gamma-budget", help=f"max Gamma_p product length (default {DEFAULT_BUDGET:.0e})")
    run.add_argument("--bernoulli-route", choices=("lehmer", "recurrence"))
    run.add_argument("--lemma-bound", help="run lemma checks only for primes up to this bound")
    _add_output(run)

    ids = sub.add_parser("identities", help="exact identity verification over an n-range")
    ids.add_argument("--ids", default=",".join(i.value for i in IdentityId))
    ids.add_argument("--n", default="1:200")
    _add_output(ids)

    gam = sub.add_parser("gamma", help="evaluate Gamma_p at a rational argument")
    gam.add_argument("--prime", type=int, required=True)
    gam.add_argument("--arg", required=True, help="rational a/b")
    gam.add_argument("--precision", type=int, default=4)
    gam.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sub.add_parser("list-checks", help="print the check registry")
    return ap


def _overrides(ns, keys) -> dict:
    return {k: getattr(ns, k) for k in keys if getattr(ns, k, None) is not None}


def _finish(summary, reports, config: SuiteConfig) -> int:
    emit_report(reports, config.format, config.out)
    if config.plot_dir:
        from .plotting import render_figures

        for path in render_figures(reports, config.plot_dir):
            print(f"wrote {path}", file=sys.stderr)
    print(json.dumps(summary.as_dict()), file=sys.stderr)
    for cid, p, msg in summary.skipped:
        logging.getLogger("scverify").info("skipped %s at p=%s: %s", cid, p, msg)
    return 0 if summary.ok else 1


def cmd_run(ns) -> int:
    base = load_config(ns.config) if ns.config else SuiteConfig()
    keys = ("checks", "primes", "precision", "n_range", "gamma_budget", "bernoulli_route",
            "lemma_bound", "format", "out", "plot_dir", "jobs")
    config = config_from_mapping(_overrides(ns, keys), base)
    summary, reports = run_suite(config)
    return _finish(summary, reports, config)


def cmd_identities(ns) -> int:
    checks = ",".join("ID_" + s.strip().upper() for s in ns.ids.split(",") if s.strip())
    values = {"checks": checks, "n_range": ns.n, **_overrides(ns, ("format", "out", "plot_dir", "jobs"))}
    config = config_from_mapping(values)
    summary, reports = run_suite(config)
    return _finish(summary, reports, config)


def cmd_gamma(ns) -> int:
    x = Fraction(ns.arg)
    p, N = ns.prime, ns.precision
    value = gamma_p(x.numerator, x.denominator, p, N, ns.budget)
    out = {"prime": p, "arg": str(x), "precision": N, "value": value}
    if x.denominator != 1:
        out["reflection_pass"] = gamma_reflection_check(x.numerator, x.denominator, p, N, ns.budget).passed
    print(json.dumps(out))
    return 0


def cmd_list_checks(ns) -> int:
    width = max(map(len, REGISTRY))
    for cid, d in REGISTRY.items():
        q = " (all k)" if d.quantified else ""
        print(f"{cid:<{width}}  {d.group:<10}  mod p^{d.exponent}  {d.residue_class():<26}  {d.description}{q}")
    for ident in IdentityId:
        print(f"{'ID_' + ident.value:<{width}}  {'IDENTITY':<10}  exact     {'n >= 1':<26}")
    return 0


COMMANDS = {"run": cmd_run, "identities": cmd_identities, "gamma": cmd_gamma, "list-checks": cmd_list_checks}


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[ns.command](ns)
    except (ScverifyError, OSError, ValueError) as exc:
        print(f"scverify: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
