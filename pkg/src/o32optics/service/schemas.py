"""Pydantic request/response models for the verification service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class VerifyRequest(BaseModel):
    n_max: int = Field(default=20, ge=2, description="per-mode occupation cutoff")
    margin: int = Field(default=2, ge=0, description="validity-subspace margin")


class ContractRequest(BaseModel):
    epsilons: list[float] = Field(
        default=[1e-1, 1e-2, 1e-3],
        min_length=1,
        description="contraction parameters, each in (0, 1]",
    )


class SqueezeRequest(BaseModel):
    r: float = Field(default=0.5, ge=0.0, description="squeeze magnitude")
    n_max: int = Field(default=20, ge=2)


class EllipseRequest(BaseModel):
    eta: float = Field(default=0.0, description="boost rapidity")
    grid_points: int = Field(default=201, ge=2)
    half_width: float | None = Field(
        default=None, description="grid half-width; defaults to 4*exp(|eta|)")


class HealthResponse(BaseModel):
    status: str
    version: str


class ScanRowModel(BaseModel):
    epsilon: float
    generator: str
    deviation: float


class ContractResponse(BaseModel):
    schema_version: int = Field(default=1, alias="schema")
    rows: list[ScanRowModel]
    slopes: dict[str, float]

    model_config = {"populate_by_name": True}


class AmplitudeModel(BaseModel):
    index: int
    n1: int
    n2: int
    re: float
    im: float


class SqueezeResponse(BaseModel):
    schema_version: int = Field(default=1, alias="schema")
    r: float
    n_max: int
    norm: float
    mean_photon: float
    mean_photon_analytic: float
    amplitudes: list[AmplitudeModel]
    covariance: list[list[float]]

    model_config = {"populate_by_name": True}


class EllipseAxes(BaseModel):
    u: float
    v: float
    product: float


class EllipseResponse(BaseModel):
    schema_version: int = Field(default=1, alias="schema")
    eta: float
    grid_points: int
    half_width: float
    axes: EllipseAxes
    z: list[float]
    t: list[float]
    psi_abs: list[float]

    model_config = {"populate_by_name": True}
