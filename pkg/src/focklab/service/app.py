"""FastAPI application wrapping the library.

Domain failures surface as 400 with a message; malformed requests are 422 via
model validation.  Flow non-convergence is not an error: the response carries
converged = false and the caller decides.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..adhm import (
    check_complex,
    fixed_point_data,
    from_json_dict,
    frobenius,
    kempf_ness_flow,
    mu_complex,
    random_stable_data,
    stability_check,
    tangent_dimension,
    to_json_dict,
)
from ..adhm.flow import FlowOptions, UnstableDataError
from ..adhm.tangent import IllConditionedRankError
from ..partitions import Partition
from ..series import BettiProfile, euler_generating, goettsche
from ..suites import run_suite
from . import models

app = FastAPI(
    title="focklab",
    version=__version__,
    description="Exact Fock-space algebra, Hilbert-scheme Betti series and an "
    "ADHM moment-map laboratory as a compute service.",
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/goettsche", response_model=models.GoettscheResponse)
def goettsche_table(req: models.GoettscheRequest) -> models.GoettscheResponse:
    series = goettsche(BettiProfile(tuple(req.betti)), req.order)
    eulers = euler_generating(series)
    rows = []
    for n in range(req.order + 1):
        poly = series.extract_poincare(n)
        rows.append(
            models.PoincareRow(
                n=n,
                coefficients=list(poly.coeffs),
                polynomial=str(poly),
                euler=eulers[n],
            )
        )
    return models.GoettscheResponse(
        version=__version__, config=req.model_dump(), rows=rows
    )


@app.post("/verify", response_model=models.VerifyResponse)
def verify(req: models.VerifyRequest) -> models.VerifyResponse:
    report = run_suite(
        req.suite,
        order=req.order,
        betti=req.betti,
        nmax=req.nmax,
        seed=req.seed,
        flow_tol=req.flow_tol,
        rank_tol=req.rank_tol,
        eps=req.eps,
    )
    return models.VerifyResponse(
        version=__version__,
        config=req.model_dump(),
        suite=report.suite,
        checks=[
            models.CheckModel(name=c.name, passed=c.passed, detail=c.detail)
            for c in report.checks
        ],
        all_passed=report.all_passed,
    )


@app.post("/adhm/fixed", response_model=models.AdhmFixedResponse)
def adhm_fixed(req: models.AdhmFixedRequest) -> models.AdhmFixedResponse:
    try:
        partition = Partition(tuple(req.partition))
        datum, weights = fixed_point_data(partition, r=req.r)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return models.AdhmFixedResponse(
        version=__version__,
        config=req.model_dump(),
        datum=to_json_dict(datum),
        weights=list(weights.cells),
        mu_c_norm=frobenius(mu_complex(datum)),
        stable=stability_check(datum),
        complex_ok=check_complex(datum),
    )


@app.post("/adhm/flow", response_model=models.AdhmFlowResponse)
def adhm_flow(req: models.AdhmFlowRequest) -> models.AdhmFlowResponse:
    try:
        if req.datum is not None:
            datum = from_json_dict(req.datum)
        else:
            datum = random_stable_data(req.n, req.r, req.seed)
        opts = FlowOptions(
            zeta_r=req.zeta_r, step=req.step, max_iter=req.max_iter, tol=req.tol
        )
        result = kempf_ness_flow(datum, opts)
    except (UnstableDataError, ValueError, KeyError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return models.AdhmFlowResponse(
        version=__version__,
        config=req.model_dump(),
        converged=result.converged,
        residual=result.residual,
        iterations=result.iterations,
        mu_c_norm=frobenius(mu_complex(result.data)),
        datum=to_json_dict(result.data),
    )


@app.post("/adhm/dim", response_model=models.AdhmDimResponse)
def adhm_dim(req: models.AdhmDimRequest) -> models.AdhmDimResponse:
    try:
        datum = random_stable_data(req.n, req.r, req.seed)
        opts = FlowOptions(zeta_r=req.zeta_r, tol=req.flow_tol)
        result = kempf_ness_flow(datum, opts)
        if not result.converged:
            raise HTTPException(
                status_code=400,
                detail=f"flow did not converge (residual {result.residual:.3e})",
            )
        dim = tangent_dimension(result.data, tol=req.rank_tol, zeta_r=req.zeta_r)
    except (UnstableDataError, IllConditionedRankError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return models.AdhmDimResponse(
        version=__version__,
        config=req.model_dump(),
        dimension=dim,
        expected=4 * req.n * req.r,
    )
