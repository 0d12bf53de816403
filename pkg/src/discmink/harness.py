"""Batch verification of a corpus against a set of checks.

Bodies are independent, so the work fans out over a process pool.  Reports
come out ordered by ``(body_id, check order)`` for any worker count.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .formats import format_report
from .theorems import CHECKS, EXPLORATORY_CHECKS, Facts, applicable

JOBS_ENV = "DISCMINK_JOBS"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2


class ConfigError(ValueError):
    pass


def default_jobs():
    raw = os.environ.get(JOBS_ENV)
    if raw is None:
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        raise ConfigError(f"{JOBS_ENV} must be a positive integer, got {raw!r}") from None
    if jobs < 1:
        raise ConfigError(f"{JOBS_ENV} must be a positive integer, got {raw!r}")
    return jobs


@dataclass(frozen=True)
class RunConfig:
    checks: tuple
    jobs: int = 1
    out: str = None
    seed: int = 0

    def __post_init__(self):
        checks = tuple(self.checks)
        if not checks:
            raise ConfigError("empty check set")
        unknown = [c for c in checks if c not in CHECKS]
        if unknown:
            raise ConfigError(f"unknown checks: {', '.join(unknown)}")
        # canonical order, duplicates dropped
        object.__setattr__(self, "checks", tuple(c for c in CHECKS if c in checks))
        if not isinstance(self.jobs, int) or self.jobs < 1:
            raise ConfigError("jobs must be a positive integer")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed must be a 64-bit unsigned integer")

    @classmethod
    def parse(cls, checks_text, **kwargs):
        names = [c.strip() for c in checks_text.split(",") if c.strip()]
        return cls(tuple(names), **kwargs)


def verify_body(body_id, K, checks):
    facts = Facts(K)
    return [CHECKS[c](K, body_id, facts) for c in checks if applicable(c, K, facts)]


def _verify_item(item):
    body_id, K, checks = item
    return verify_body(body_id, K, checks)


@dataclass
class Summary:
    bodies: int = 0
    reports: int = 0
    per_check: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    exploratory_violations: list = field(default_factory=list)
    equalities: dict = field(default_factory=dict)
    max_margin: dict = field(default_factory=dict)

    @property
    def exit_code(self):
        return EXIT_VIOLATION if self.violations else EXIT_OK

    def lines(self):
        out = [f"# summary bodies={self.bodies} reports={self.reports} "
               f"violations={len(self.violations)} "
               f"exploratory_violations={len(self.exploratory_violations)}"]
        for check in CHECKS:
            if check not in self.per_check:
                continue
            eq = self.equalities.get(check, [])
            margin = self.max_margin.get(check)
            out.append(f"# check={check} reports={self.per_check[check]} equality={len(eq)} "
                       f"max_margin={margin[0]} max_margin_body={margin[1]}")
            if eq:
                out.append(f"# equality[{check}]={','.join(eq)}")
        for rep in self.violations:
            out.append(f"# VIOLATION {format_report(rep)}")
        for rep in self.exploratory_violations:
            out.append(f"# CONJECTURE-VIOLATION {format_report(rep)}")
        return out


def _margin(rep):
    """bound - lhs where both sides are rational, else None."""
    try:
        return rep.bound - rep.lhs
    except TypeError:
        return None


def summarize(reports):
    s = Summary()
    s.bodies = len({r.body_id for r in reports})
    s.reports = len(reports)
    for r in reports:
        s.per_check[r.check] = s.per_check.get(r.check, 0) + 1
        if not r.satisfied:
            (s.exploratory_violations if r.check in EXPLORATORY_CHECKS else s.violations).append(r)
        if r.equality:
            s.equalities.setdefault(r.check, []).append(r.body_id)
        m = _margin(r)
        cur = s.max_margin.get(r.check)
        if cur is None or (m is not None and (cur[0] is None or m > cur[0])):
            s.max_margin[r.check] = (m, r.body_id)
    return s


def run_verification(corpus, config, stream=None):
    """Verify every body; stream report lines as batches finish; return (reports, summary).

    Bodies are processed in body_id order and ``map`` keeps that order, so the
    stream is already sorted and the same for every worker count.
    """
    items = sorted(((body_id, K, config.checks) for body_id, K in corpus), key=lambda it: it[0])
    if stream is not None:
        stream.write(f"# discmink verify corpus={corpus.id} checks={','.join(config.checks)} "
                     f"seed={config.seed}\n")
    reports = []

    def consume(batches):
        for batch in batches:
            reports.extend(batch)
            if stream is not None:
                for r in batch:
                    stream.write(format_report(r) + "\n")
                stream.flush()

    if config.jobs == 1 or len(items) <= 1:
        consume(map(_verify_item, items))
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            consume(pool.map(_verify_item, items, chunksize=4))
    summary = summarize(reports)
    if stream is not None:
        for line in summary.lines():
            stream.write(line + "\n")
    return reports, summary
