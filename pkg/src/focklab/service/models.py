"""Request and response models of the service.

Every response embeds the package version and the fully resolved request
configuration, so identical requests produce byte-identical payloads.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator


class GoettscheRequest(BaseModel):
    betti: list[int] = Field(..., min_length=5, max_length=5)
    order: int = Field(10, ge=0)

    @field_validator("betti")
    @classmethod
    def non_negative(cls, v):
        if any(b < 0 for b in v):
            raise ValueError("Betti numbers must be non-negative")
        return v


class PoincareRow(BaseModel):
    n: int
    coefficients: list[int]
    polynomial: str
    euler: int


class GoettscheResponse(BaseModel):
    version: str
    config: dict
    rows: list[PoincareRow]


class VerifyRequest(BaseModel):
    suite: Literal["relations", "characters", "identity", "appendix"]
    order: Optional[int] = Field(None, ge=0)
    betti: Optional[list[int]] = Field(None, min_length=5, max_length=5)
    nmax: Optional[int] = Field(None, ge=0)
    seed: int = 0
    flow_tol: float = Field(1e-8, gt=0)
    rank_tol: float = Field(1e-6, gt=0)
    eps: float = Field(0.01, gt=0)


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    version: str
    config: dict
    suite: str
    checks: list[CheckModel]
    all_passed: bool


class AdhmFixedRequest(BaseModel):
    partition: list[int] = Field(default_factory=list)
    r: int = Field(1, ge=1)


class AdhmFixedResponse(BaseModel):
    version: str
    config: dict
    datum: dict
    weights: list[tuple[int, int]]
    mu_c_norm: float
    stable: bool
    complex_ok: bool


class AdhmFlowRequest(BaseModel):
    n: int = Field(1, ge=1)
    r: int = Field(1, ge=1)
    seed: int = 0
    datum: Optional[dict] = None  # explicit input instead of seeded sampling
    zeta_r: float = Field(-1.0, lt=0)
    step: float = Field(0.25, gt=0)
    max_iter: int = Field(10000, ge=1)
    tol: float = Field(1e-8, gt=0)


class AdhmFlowResponse(BaseModel):
    version: str
    config: dict
    converged: bool
    residual: float
    iterations: int
    mu_c_norm: float
    datum: dict


class AdhmDimRequest(BaseModel):
    n: int = Field(1, ge=1)
    r: int = Field(1, ge=1)
    seed: int = 0
    rank_tol: float = Field(1e-6, gt=0)
    zeta_r: float = Field(-1.0, lt=0)
    flow_tol: float = Field(1e-8, gt=0)


class AdhmDimResponse(BaseModel):
    version: str
    config: dict
    dimension: int
    expected: int
