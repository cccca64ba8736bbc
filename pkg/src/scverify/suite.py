"""Suite orchestration: prime sieving, dispatch, aggregation and report output."""
from __future__ import annotations

import configparser
import csv
import io
import json
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields, replace
from typing import Callable, Iterable, Optional, TextIO

from .checks import GROUPS, REGISTRY, PrimeContext, evaluate, max_exponent
from .errors import BudgetExceeded, ConfigInvalid, ScverifyError
from .gamma import DEFAULT_BUDGET
from .identities import IdentityId, identity_verify
from .padic import primes_between
from .report import FIELDS, CheckReport

log = logging.getLogger(__name__)

IDENTITY_PREFIX = "ID_"


@dataclass
class SuiteConfig:
    primes: tuple[int, int] = (5, 1000)
    checks: tuple[str, ...] = ("THEOREMS", "LEMMAS")
    precision: int = 8
    n_range: tuple[int, int] = (1, 200)
    gamma_budget: int = DEFAULT_BUDGET
    format: str = "jsonl"
    jobs: int = 1
    bernoulli_route: str = "lehmer"
    lemma_bound: Optional[int] = None  # lemmas only up to this prime, when set
    out: Optional[str] = None
    plot_dir: Optional[str] = None

    def resolve(self) -> tuple[list[str], list[IdentityId]]:
        """Expand group names into (prime check ids, identity ids); validates."""
        prime_checks: list[str] = []
        idents: list[IdentityId] = []
        for name in self.checks:
            name = name.strip()
            if not name:
                continue
            key = name.upper()
            if key == "IDENTITIES":
                idents.extend(IdentityId)
            elif key in GROUPS:
                prime_checks.extend(GROUPS[key])
            elif name in REGISTRY:
                prime_checks.append(name)
            elif key.startswith(IDENTITY_PREFIX) and key[len(IDENTITY_PREFIX):] in IdentityId.__members__:
                idents.append(IdentityId(key[len(IDENTITY_PREFIX):]))
            else:
                raise ConfigInvalid(f"unknown check {name!r}")
        if key_all(self.checks):
            idents = list(IdentityId)
        prime_checks = list(dict.fromkeys(prime_checks))
        idents = list(dict.fromkeys(idents))
        need = max_exponent(prime_checks) + 2 if prime_checks else 0
        if self.precision < need:
            raise ConfigInvalid(f"precision {self.precision} < {need} (largest exponent + 2 guard digits)")
        if self.format not in ("jsonl", "csv"):
            raise ConfigInvalid(f"format must be jsonl or csv, got {self.format!r}")
        if self.jobs < 1:
            raise ConfigInvalid("jobs must be >= 1")
        if self.n_range[0] < 1:
            raise ConfigInvalid("identity n-range must start at n >= 1")
        if self.bernoulli_route not in ("lehmer", "recurrence"):
            raise ConfigInvalid(f"unknown Bernoulli route {self.bernoulli_route!r}")
        return prime_checks, idents


def key_all(names: Iterable[str]) -> bool:
    return any(n.strip().upper() == "ALL" for n in names)


@dataclass
class Summary:
    total: int = 0
    passed: int = 0
    failed: int = 0
    flagged: int = 0
    skipped: list[tuple[str, int, str]] = field(default_factory=list)
    errors: list[tuple[str, int, str]] = field(default_factory=list)
    failures: list[CheckReport] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and not self.errors

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "flagged": self.flagged,
            "skipped": len(self.skipped),
            "errors": len(self.errors),
            "elapsed_s": round(self.elapsed_s, 3),
        }


def _run_prime(p: int, check_ids: list[str], K: int, route: str, budget: int):
    ctx = PrimeContext(p, K, route, budget)
    reports, skipped, errors = [], [], []
    for cid in check_ids:
        d = REGISTRY[cid]
        if not d.applies(p):
            continue
        if d.cost(p) > budget:
            skipped.append((cid, p, f"Gamma product length {d.cost(p)} exceeds budget {budget}"))
            continue
        try:
            reports.append(evaluate(cid, ctx))
        except (ScverifyError, ArithmeticError) as exc:
            errors.append((cid, p, f"{type(exc).__name__}: {exc}"))
    return reports, skipped, errors


def _run_identity(ident: IdentityId, lo: int, hi: int, K: int):
    return [identity_verify(ident, range(lo, hi + 1), K)], [], []


def run_suite(config: SuiteConfig, on_report: Optional[Callable[[CheckReport], None]] = None):
    """Dispatch every applicable (check, prime) pair; returns (summary, reports)."""
    t0 = time.perf_counter()
    prime_checks, idents = config.resolve()
    lo, hi = config.primes
    primes = [p for p in primes_between(lo, hi) if p >= 5] if prime_checks else []
    K, route, budget = config.precision, config.bernoulli_route, config.gamma_budget

    def checks_for(p: int) -> list[str]:
        if config.lemma_bound is None or p <= config.lemma_bound:
            return prime_checks
        return [c for c in prime_checks if REGISTRY[c].group != "LEMMA"]

    tasks = [(_run_prime, (p, checks_for(p), K, route, budget)) for p in primes]
    tasks += [(_run_identity, (i, config.n_range[0], config.n_range[1], K)) for i in idents]

    summary = Summary()
    reports: list[CheckReport] = []

    def collect(result):
        reps, skipped, errors = result
        for r in reps:
            reports.append(r)
            summary.total += 1
            if r.flagged:
                summary.flagged += 1
            elif r.passed:
                summary.passed += 1
            else:
                summary.failed += 1
                summary.failures.append(r)
            if on_report is not None:
                on_report(r)
        summary.skipped.extend(skipped)
        summary.errors.extend(errors)
        for cid, p, msg in errors:
            log.error("%s at p=%s: %s", cid, p, msg)

    if config.jobs == 1 or len(tasks) <= 1:
        for fn, args in tasks:
            collect(fn(*args))
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            futures = [pool.submit(fn, *args) for fn, args in tasks]
            for fut in futures:
                collect(fut.result())
    summary.elapsed_s = time.perf_counter() - t0
    return summary, reports


def _write(reports: Iterable[CheckReport], fmt: str, fh: TextIO) -> None:
    if fmt == "jsonl":
        for r in reports:
            fh.write(json.dumps(r.record(), separators=(",", ":")) + "\n")
    elif fmt == "csv":
        w = csv.writer(fh, lineterminator="\r\n")
        w.writerow(FIELDS)
        for r in reports:
            rec = r.record()
            rec["pass"] = "true" if rec["pass"] else "false"
            w.writerow([rec[k] for k in FIELDS])
    else:
        raise ConfigInvalid(f"unknown format {fmt!r}")


def emit_report(reports: Iterable[CheckReport], fmt: str = "jsonl", destination=None) -> None:
    """Write one record per report to a path, a text stream, or stdout (None / "-")."""
    if destination is None or destination == "-":
        _write(reports, fmt, sys.stdout)
    elif isinstance(destination, (str, os.PathLike)):
        with open(destination, "w", newline="", encoding="utf-8") as fh:
            _write(reports, fmt, fh)
    else:
        _write(reports, fmt, destination)


def format_reports(reports: Iterable[CheckReport], fmt: str = "jsonl") -> str:
    buf = io.StringIO(newline="")
    _write(reports, fmt, buf)
    return buf.getvalue()


def _parse_interval(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        return int(lo), int(lo)
    return int(lo), int(hi)


def parse_jobs(text) -> int:
    if str(text).lower() == "auto":
        return os.cpu_count() or 1
    return int(text)


_CONVERTERS = {
    "primes": _parse_interval,
    "n_range": _parse_interval,
    "checks": lambda s: tuple(x.strip() for x in s.split(",") if x.strip()),
    "precision": int,
    "gamma_budget": lambda s: int(float(s)),
    "jobs": parse_jobs,
    "lemma_bound": int,
}


def config_from_mapping(values: dict, base: Optional[SuiteConfig] = None) -> SuiteConfig:
    """Overlay string-valued settings (config file or CLI) onto a config."""
    known = {f.name for f in fields(SuiteConfig)}
    updates = {}
    for key, raw in values.items():
        key = key.strip().replace("-", "_")
        if key == "n":
            key = "n_range"
        if key not in known:
            raise ConfigInvalid(f"unknown config key {key!r}")
        try:
            updates[key] = _CONVERTERS.get(key, str)(raw) if isinstance(raw, str) else raw
        except ValueError as exc:
            raise ConfigInvalid(f"bad value for {key}: {raw!r}") from exc
    return replace(base or SuiteConfig(), **updates)


def load_config(path: str) -> SuiteConfig:
    """Flat key=value file; '#' starts a comment."""
    parser = configparser.ConfigParser(interpolation=None, comment_prefixes=("#", ";"))
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_string("[suite]\n" + fh.read())
    except configparser.Error as exc:
        raise ConfigInvalid(f"{path}: {exc}") from exc
    return config_from_mapping(dict(parser["suite"]))
