"""HTTP surface over the core library.

POST /analyze runs the pipeline on one candidate, POST /enumerate lists
candidates under constraints, POST /run does both.  Responses carry the
same report shape as the jsonlines CLI output.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .. import arith, cli, sieve
from ..enumerate import EnumConstraints, enumerate_real_weil
from ..sieve import SieveConfig
from ..weil import RealWeilPoly

app = FastAPI(title="weilsieve", version="0.1.0")


class PipelineOptions(BaseModel):
    horizon: int | None = Field(default=None, ge=1)
    exhaustive: bool = False
    tests: list[str] | None = None
    effort: int = Field(default=arith.DEFAULT_BUDGET, ge=1)

    def to_config(self) -> SieveConfig:
        if self.tests is not None:
            for t in self.tests:
                if t not in cli.TEST_NAMES:
                    raise HTTPException(422, f"unknown test name: {t}")
        return SieveConfig(
            horizon=self.horizon,
            exhaustive=self.exhaustive,
            tests=tuple(self.tests) if self.tests is not None else None,
            effort=self.effort,
        )


class AnalyzeRequest(BaseModel):
    q: int = Field(ge=2)
    h: list[int] = Field(min_length=2, description="ascending coefficients")
    options: PipelineOptions = PipelineOptions()


class TestRow(BaseModel):
    name: str
    status: str
    certificate: dict


class Report(BaseModel):
    q: int
    g: int
    h: list[int]
    defect: int
    point_counts: list[int]
    verdict: str
    tests: list[TestRow]


class EnumerateRequest(BaseModel):
    q: int = Field(ge=2)
    g: int = Field(ge=1)
    points: int | None = None
    defect: int | None = Field(default=None, ge=0)
    horizon: int | None = Field(default=None, ge=1)


class EnumerateResponse(BaseModel):
    q: int
    g: int
    candidates: list[list[int]]


class RunRequest(EnumerateRequest):
    options: PipelineOptions = PipelineOptions()


class RunResponse(BaseModel):
    reports: list[Report]
    counts: dict[str, int]


def _validate_q(q: int) -> None:
    if arith.prime_power_split(q) is None:
        raise HTTPException(422, f"q = {q} is not a prime power")


def _constraints(req: EnumerateRequest, horizon: int) -> EnumConstraints:
    return EnumConstraints(
        exact_point_count=req.points,
        max_defect=req.defect,
        require_nonneg_places_to=horizon,
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/analyze", response_model=Report)
def analyze(req: AnalyzeRequest) -> Report:
    _validate_q(req.q)
    config = req.options.to_config()
    try:
        report = cli.analyze_single(req.h, req.q, config)
    except ValueError as exc:
        raise HTTPException(422, str(exc))
    return Report(**cli.report_row(report))


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_candidates(req: EnumerateRequest) -> EnumerateResponse:
    _validate_q(req.q)
    horizon = req.horizon or 2 * req.g
    cands = [c.coeffs for c in
             enumerate_real_weil(req.q, req.g, _constraints(req, horizon))]
    return EnumerateResponse(q=req.q, g=req.g, candidates=cands)


@app.post("/run", response_model=RunResponse)
def run_batch(req: RunRequest) -> RunResponse:
    _validate_q(req.q)
    horizon = req.horizon or 2 * req.g
    config = req.options.to_config()
    if config.horizon is None:
        config = SieveConfig(horizon=horizon, exhaustive=config.exhaustive,
                             tests=config.tests, effort=config.effort)
    counts = {sieve.ELIMINATED: 0, sieve.CONSTRAINED: 0, sieve.OPEN: 0}
    reports = []
    for cand in enumerate_real_weil(req.q, req.g, _constraints(req, horizon)):
        report = sieve.run_pipeline(cand, config)
        counts[report.verdict] += 1
        reports.append(Report(**cli.report_row(report)))
    return RunResponse(reports=reports, counts=counts)
