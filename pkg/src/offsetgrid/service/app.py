"""FastAPI application exposing the package's operations.

All endpoints are stateless POSTs over pydantic models; the CLI is a thin
client of this app (in-process by default).  Input problems surface as
HTTP 400 with a message; everything else is a plain 200 with a deterministic
body for identical inputs and seeds.
"""

from __future__ import annotations

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import InternalCheckError, OffsetGridError
from ..exactness import ExactDistance
from ..geometry import Scene
from ..lattice import components, offset_discretize
from ..radii import AlphaResult, alpha, radii_report
from ..render import render_svg
from ..scenefile import parse_radius, rat_str, scene_from_document
from ..verify import run_suite
from . import schemas


def _scene_from_model(model: schemas.SceneModel) -> Scene:
    doc = model.model_dump()
    _stringify_floats(doc)
    return scene_from_document(doc)


def _stringify_floats(node) -> None:
    # JSON numbers arrive as floats; reinterpret through their shortest
    # decimal form so 0.49 means 49/100, not the nearest binary double.
    if isinstance(node, dict):
        for key, value in node.items():
            if isinstance(value, float):
                node[key] = repr(value)
            else:
                _stringify_floats(value)
    elif isinstance(node, list):
        for i, value in enumerate(node):
            if isinstance(value, float):
                node[i] = repr(value)
            else:
                _stringify_floats(value)


def _exact_value(d: ExactDistance) -> schemas.ExactValue:
    sq = d.square()
    return schemas.ExactValue(
        r2=None if sq is None else str(rat_str(sq)),
        exact=d.exact_str(),
        decimal=d.decimal_str(),
    )


def _alpha_value(j: int, res: AlphaResult) -> schemas.AlphaValue:
    sq = res.value.square()
    return schemas.AlphaValue(
        j=j,
        r2=None if sq is None else str(rat_str(sq)),
        exact=res.value.exact_str(),
        decimal=res.value.decimal_str(),
        attained=res.attained,
    )


app = FastAPI(
    title="offsetgrid",
    description="Exact offset discretization and connectivity analysis of punctured scenes.",
)


@app.exception_handler(OffsetGridError)
async def _domain_error(request: Request, exc: OffsetGridError):
    status = 500 if isinstance(exc, InternalCheckError) else 400
    return JSONResponse(status_code=status, content={"detail": str(exc)})


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(status="ok", version=__version__)


@app.post("/discretize", response_model=schemas.DiscretizeResponse)
def discretize(req: schemas.DiscretizeRequest) -> schemas.DiscretizeResponse:
    scene = _scene_from_model(req.scene)
    r2 = parse_radius(req.radius)
    ds = offset_discretize(scene, r2)
    return schemas.DiscretizeResponse(
        dim=scene.dim,
        r2=str(rat_str(r2)),
        count=len(ds),
        points=[list(p) for p in ds.sorted_points()],
    )


@app.post("/components", response_model=schemas.ComponentsResponse)
def components_endpoint(req: schemas.ComponentsRequest) -> schemas.ComponentsResponse:
    scene = _scene_from_model(req.scene)
    r2 = parse_radius(req.radius)
    labeling = components(offset_discretize(scene, r2), req.k)
    return schemas.ComponentsResponse(
        dim=scene.dim,
        r2=str(rat_str(r2)),
        k=req.k,
        count=labeling.count,
        components=[[list(p) for p in group] for group in labeling.groups()],
    )


@app.post("/radii", response_model=schemas.RadiiResponse)
def radii_endpoint(req: schemas.RadiiRequest) -> schemas.RadiiResponse:
    scene = _scene_from_model(req.scene)
    report = radii_report(scene, seed=req.seed)
    omega = None
    if report.omega is not None:
        r2 = report.omega.r2
        omega = schemas.EnclosingBallOut(
            center=[str(rat_str(c)) for c in report.omega.center],
            r2=str(rat_str(r2)),
            decimal=ExactDistance.from_square(r2).decimal_str(),
        )
    return schemas.RadiiResponse(
        dim=report.dim,
        m=report.m,
        rho=_exact_value(report.rho),
        bottleneck_gap=_exact_value(report.bottleneck),
        delta=_exact_value(report.delta),
        omega=omega,
        omega_note=report.omega_note,
        alpha0=_alpha_value(0, report.alpha0),
        alpha_top=_alpha_value(report.dim - 1, report.alpha_top),
    )


@app.post("/alpha", response_model=schemas.AlphaValue)
def alpha_endpoint(req: schemas.AlphaRequest) -> schemas.AlphaValue:
    scene = _scene_from_model(req.scene)
    r2_max = None if req.radius_max is None else parse_radius(req.radius_max)
    res = alpha(scene, req.j, r2_max)
    return _alpha_value(req.j, res)


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify_endpoint(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    report = run_suite(req.suite, req.trials, req.seed)
    return schemas.VerifyResponse(
        suite=report.suite,
        trials=report.trials,
        seed=report.seed,
        passed=report.passed,
        failures=[
            schemas.FailureOut(
                trial=f.trial, seed=f.seed, scene=f.scene, witness=f.witness
            )
            for f in report.failures
        ],
        elapsed=report.elapsed,
    )


@app.post("/render")
def render_endpoint(req: schemas.RenderRequest) -> Response:
    scene = _scene_from_model(req.scene)
    r2 = parse_radius(req.radius)
    svg = render_svg(scene, r2)
    return Response(content=svg, media_type="image/svg+xml")
