"""In-process handlers shared by the command line and the HTTP service.

Each handler takes a plain config, runs the exact computation, and returns
plain data.  Error discipline: malformed input raises PotentialParseError
or ValueError (exit 2 at the surface); a violated internal invariant in a
finished artifact raises InternalInvariantError carrying a report (exit 3);
failed checks are not errors, they are reports with status "fail" (exit 1).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .bases import subsets
from .poly import Context, parse_potential
from .tensors import degrees_a
from .trees import DEFAULT_M_CAP, mu_k, mu_table
from .verify import run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL = 3

PARALLELISM_ENV = "KOSZULMIN_PARALLELISM"


class InternalInvariantError(Exception):
    """A finished artifact violated a structural law it must satisfy."""

    def __init__(self, report: dict):
        super().__init__(report.get("message", "internal invariant violation"))
        self.report = report


@dataclass
class RunConfig:
    n: int
    d: int
    potential: str
    max_k: int | None = None
    m_cap: int = DEFAULT_M_CAP
    theta_cap: int = 1
    sym_bound: int | None = None
    max_relation: int = 4
    f_bound: int = 3
    parallelism: int | None = None

    def __post_init__(self):
        if self.theta_cap < 1:
            raise ValueError("theta_cap must be at least 1")
        if self.m_cap < 1:
            raise ValueError("m_cap must be at least 1")
        if self.max_k is not None and self.max_k < 1:
            raise ValueError("max_k must be at least 1")


def default_parallelism() -> int:
    raw = os.environ.get(PARALLELISM_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_context(config: RunConfig) -> Context:
    pot = parse_potential(config.potential, config.n, config.d)
    return Context(pot)


def _validate_table(table: dict) -> None:
    d = table["d"]
    for e in table["entries"]:
        internal_in = sum(len(m) for m in e["inputs"])
        coh_in = internal_in + 2 - e["k"]
        for key in e["output"].terms:
            internal, coh = degrees_a(key, d)
            if internal != internal_in or coh != coh_in:
                raise InternalInvariantError(
                    {
                        "message": "graded output violates the degree laws",
                        "entry": {"k": e["k"], "inputs": e["inputs"]},
                        "expected": {
                            "internal": internal_in,
                            "cohomological": coh_in,
                        },
                        "got": {"internal": internal, "cohomological": coh},
                    }
                )


def _parallel_table(ctx: Context, max_k: int, theta_cap: int, m_cap: int, workers: int) -> dict:
    # same enumeration order as the serial builder; the pool only
    # evaluates, assembly stays in job order, so output is identical
    monos = [th for th in subsets(ctx.n) if len(th) <= theta_cap]
    jobs = [
        tup
        for k in range(1, max_k + 1)
        for tup in product(monos, repeat=k)
    ]
    cache: dict = {}

    def evaluate(tup):
        return mu_k(ctx, tuple((0, th) for th in tup), m_cap=m_cap, cache=cache)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(evaluate, jobs))
    entries = [
        {"k": len(tup), "inputs": [list(th) for th in tup], "output": val}
        for tup, val in zip(jobs, results)
        if val
    ]
    return {
        "n": ctx.n,
        "d": ctx.d,
        "potential": ctx.potential.p.pretty(),
        "entries": entries,
    }


def run_transfer(config: RunConfig) -> dict:
    """Compute the table of transferred products described by the config."""
    ctx = build_context(config)
    max_k = config.max_k if config.max_k is not None else max(ctx.d, 2)
    workers = config.parallelism if config.parallelism else default_parallelism()
    if workers > 1:
        table = _parallel_table(ctx, max_k, config.theta_cap, config.m_cap, workers)
    else:
        table = mu_table(ctx, max_k, theta_cap=config.theta_cap, m_cap=config.m_cap)
    _validate_table(table)
    return table


def run_check(config: RunConfig, suite: str) -> tuple[int, list[dict]]:
    """Run a named verification suite; exit code 0 iff every report passes."""
    ctx = build_context(config)
    reports = run_suite(
        ctx,
        suite,
        max_k=config.max_k,
        theta_cap=config.theta_cap,
        m_cap=config.m_cap,
        sym_bound=config.sym_bound,
        max_relation=config.max_relation,
        f_bound=config.f_bound,
    )
    ok = all(r["status"] == "pass" for r in reports)
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), reports


def run_sod(kind: str, params: dict) -> dict:
    """Dispatch one decomposition calculator by name."""
    from . import sod

    if kind == "orlov":
        return sod.orlov_case(params["dim"], params["degree"])
    if kind == "relative":
        return sod.relative_ci(params["rank"], params["degrees"])
    if kind == "lefschetz":
        return sod.lefschetz_blocks(params["rank"], params["degree"])
    if kind == "veronese":
        return sod.veronese_branch(params["rank"], params["degree"], params["codim"])
    raise ValueError(f"unknown decomposition calculator: {kind}")
