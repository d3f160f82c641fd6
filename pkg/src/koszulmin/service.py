"""HTTP surface over the in-process handlers.

POST /transfer computes a product table, POST /check runs a verification
suite, POST /sod evaluates a decomposition calculator.  Check failures are
data (status fields in the reports), not transport errors; only malformed
input (422) and violated internal invariants (500) map to error codes.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .api import (
    InternalInvariantError,
    RunConfig,
    run_check,
    run_sod,
    run_transfer,
)
from .poly import PotentialParseError
from .serialize import mu_table_json

app = FastAPI(title="koszulmin", version="0.1.0")


class TransferRequest(BaseModel):
    n: int = Field(ge=1)
    d: int = Field(ge=1)
    potential: str
    max_k: int | None = Field(default=None, ge=1)
    m_cap: int = Field(default=4, ge=1)
    theta_cap: int = Field(default=1, ge=1)
    parallelism: int | None = Field(default=None, ge=1)


class CheckRequest(TransferRequest):
    suite: Literal["side", "factorization", "mu", "stasheff", "all"] = "all"
    max_relation: int = Field(default=4, ge=2)
    sym_bound: int | None = Field(default=None, ge=1)
    f_bound: int = Field(default=3, ge=0)


class SodRequest(BaseModel):
    kind: Literal["orlov", "relative", "lefschetz", "veronese"]
    dim: int | None = None
    degree: int | None = None
    rank: int | None = None
    degrees: list[int] | None = None
    codim: int | None = None


class CheckResponse(BaseModel):
    all_pass: bool
    reports: list[dict]


def _config(req: TransferRequest) -> RunConfig:
    kwargs = dict(
        n=req.n,
        d=req.d,
        potential=req.potential,
        max_k=req.max_k,
        m_cap=req.m_cap,
        theta_cap=req.theta_cap,
        parallelism=req.parallelism,
    )
    if isinstance(req, CheckRequest):
        kwargs.update(
            max_relation=req.max_relation,
            sym_bound=req.sym_bound,
            f_bound=req.f_bound,
        )
    return RunConfig(**kwargs)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/transfer")
def transfer(req: TransferRequest) -> dict:
    try:
        table = run_transfer(_config(req))
    except PotentialParseError as e:
        raise HTTPException(status_code=422, detail=str(e))
    except InternalInvariantError as e:
        raise HTTPException(status_code=500, detail=e.report)
    return mu_table_json(table)


@app.post("/check")
def check(req: CheckRequest) -> CheckResponse:
    try:
        _, reports = run_check(_config(req), req.suite)
    except PotentialParseError as e:
        raise HTTPException(status_code=422, detail=str(e))
    return CheckResponse(
        all_pass=all(r["status"] == "pass" for r in reports), reports=reports
    )


@app.post("/sod")
def sod(req: SodRequest) -> dict:
    params = {
        "dim": req.dim,
        "degree": req.degree,
        "rank": req.rank,
        "degrees": req.degrees,
        "codim": req.codim,
    }
    needed = {
        "orlov": ("dim", "degree"),
        "relative": ("rank", "degrees"),
        "lefschetz": ("rank", "degree"),
        "veronese": ("rank", "degree", "codim"),
    }[req.kind]
    missing = [name for name in needed if params[name] is None]
    if missing:
        raise HTTPException(
            status_code=422, detail=f"missing arguments: {', '.join(missing)}"
        )
    try:
        return run_sod(req.kind, params)
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e))
