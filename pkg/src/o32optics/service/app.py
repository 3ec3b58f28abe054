"""HTTP front end: verification suites, contraction scans, state exports.

The verify payload is an open-ended report bundle, so that endpoint
returns the bundle dict as-is; the other endpoints use typed response
models.  Requests that fail validation return 422; requests that are
well-formed but outside an operation's safe domain (insufficient
truncation) return 400 with the reason.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse

from .. import __version__
from ..contraction import convergence_scan, fit_loglog_slope, CONTRACTED_TARGETS
from ..fock import make_space
from ..states import (
    TruncationError,
    boosted_ground_state,
    mean_photon_analytic,
    mean_photon_number,
    quadrature_covariance,
    squeezed_vacuum,
    state_to_json,
)
from ..verify import run_verification
from .schemas import (
    ContractRequest,
    ContractResponse,
    EllipseAxes,
    EllipseRequest,
    EllipseResponse,
    HealthResponse,
    ScanRowModel,
    SqueezeRequest,
    SqueezeResponse,
    VerifyRequest,
)

app = FastAPI(
    title="o32optics",
    description="Two-mode oscillator realization of the O(3,2) algebra, "
                "its 5x5 representation, and the contraction to the "
                "Poincare algebra, with every commutation relation "
                "machine-checked.",
    version=__version__,
)


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/verify")
def verify(request: VerifyRequest) -> JSONResponse:
    if request.margin > request.n_max:
        raise HTTPException(status_code=422,
                            detail=f"margin {request.margin} exceeds n_max {request.n_max}")
    bundle = run_verification(n_max=request.n_max, margin=request.margin)
    return JSONResponse(content=bundle)


@app.post("/contract", response_model=ContractResponse, response_model_by_alias=True)
def contract(request: ContractRequest) -> ContractResponse:
    for eps in request.epsilons:
        if not 0.0 < eps <= 1.0:
            raise HTTPException(status_code=422,
                                detail=f"epsilon must lie in (0, 1], got {eps}")
    rows = convergence_scan(request.epsilons)
    slopes = {}
    if len(set(r.epsilon for r in rows)) >= 2:
        slopes = {gen: fit_loglog_slope(rows, gen) for gen in CONTRACTED_TARGETS}
    return ContractResponse(
        rows=[ScanRowModel(**row.to_dict()) for row in rows],
        slopes=slopes,
    )


@app.post("/squeeze", response_model=SqueezeResponse, response_model_by_alias=True)
def squeeze(request: SqueezeRequest) -> SqueezeResponse:
    space = make_space(request.n_max)
    try:
        state = squeezed_vacuum(request.r, space)
    except TruncationError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    cov = quadrature_covariance(state)
    return SqueezeResponse(
        r=request.r,
        n_max=request.n_max,
        norm=state.norm(),
        mean_photon=mean_photon_number(state),
        mean_photon_analytic=mean_photon_analytic(request.r),
        amplitudes=state_to_json(state),
        covariance=[[float(v) for v in row] for row in cov],
    )


@app.post("/ellipse", response_model=EllipseResponse, response_model_by_alias=True)
def ellipse(request: EllipseRequest) -> EllipseResponse:
    try:
        sample = boosted_ground_state(request.eta, request.grid_points,
                                      request.half_width)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    half_width = request.half_width
    if half_width is None:
        half_width = float(4.0 * np.exp(abs(request.eta)))
    return EllipseResponse(
        eta=request.eta,
        grid_points=request.grid_points,
        half_width=half_width,
        axes=EllipseAxes(u=sample.axis_u, v=sample.axis_v,
                         product=sample.axis_product),
        z=[float(v) for v in sample.z],
        t=[float(v) for v in sample.t],
        psi_abs=[float(v) for v in sample.psi_abs],
    )
