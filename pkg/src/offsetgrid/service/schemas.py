"""Pydantic request/response models for the HTTP service.

Rational values travel as ints or strings ("p/q" or a decimal literal).
Floats are tolerated on input and reinterpreted through their shortest
decimal form; exact callers should send strings.
"""

from __future__ import annotations

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, Field

RatValue = Union[int, str, float]
CoordVec = list[RatValue]


class PointPrimModel(BaseModel):
    type: Literal["point"]
    coords: CoordVec


class SegmentModel(BaseModel):
    type: Literal["segment"]
    a: CoordVec
    b: CoordVec


class PolylineModel(BaseModel):
    type: Literal["polyline"]
    points: list[CoordVec]


class BallModel(BaseModel):
    type: Literal["ball"]
    center: CoordVec
    radius: RatValue


PrimitiveModel = Annotated[
    Union[PointPrimModel, SegmentModel, PolylineModel, BallModel],
    Field(discriminator="type"),
]


class SceneModel(BaseModel):
    dim: int
    primitives: list[PrimitiveModel]
    punctures: list[CoordVec] = Field(default_factory=list)
    components: Optional[list[list[int]]] = None


class DiscretizeRequest(BaseModel):
    scene: SceneModel
    radius: str


class DiscretizeResponse(BaseModel):
    dim: int
    r2: str
    count: int
    points: list[list[int]]


class ComponentsRequest(BaseModel):
    scene: SceneModel
    radius: str
    k: int


class ComponentsResponse(BaseModel):
    dim: int
    r2: str
    k: int
    count: int
    components: list[list[list[int]]]


class ExactValue(BaseModel):
    """An exact nonnegative value: squared rational when available, the
    symbolic form otherwise, plus a 12-digit decimal approximation."""

    r2: Optional[str]
    exact: str
    decimal: str


class AlphaValue(BaseModel):
    j: int
    r2: Optional[str]
    exact: str
    decimal: str
    attained: bool


class EnclosingBallOut(BaseModel):
    center: list[str]
    r2: str
    decimal: str


class RadiiRequest(BaseModel):
    scene: SceneModel
    seed: int = 0


class RadiiResponse(BaseModel):
    dim: int
    m: int
    rho: ExactValue
    bottleneck_gap: ExactValue
    delta: ExactValue
    omega: Optional[EnclosingBallOut]
    omega_note: Optional[str]
    alpha0: AlphaValue
    alpha_top: AlphaValue


class AlphaRequest(BaseModel):
    scene: SceneModel
    j: int
    radius_max: Optional[str] = None


class VerifyRequest(BaseModel):
    suite: str
    trials: int = 100
    seed: int = 0


class FailureOut(BaseModel):
    trial: int
    seed: int
    scene: Optional[str]
    witness: str


class VerifyResponse(BaseModel):
    suite: str
    trials: int
    seed: int
    passed: bool
    failures: list[FailureOut]
    elapsed: float


class RenderRequest(BaseModel):
    scene: SceneModel
    radius: str


class HealthResponse(BaseModel):
    status: str
    version: str
