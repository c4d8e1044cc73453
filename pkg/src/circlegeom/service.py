"""Local HTTP service exposing the catalog, the circle closure, hull
boundaries, verification, and TikZ export.  Stateless per request; the
catalog is immutable after startup."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, Field

from circlegeom.catalog import (
    CatalogRecord,
    configuration_from_json,
    record_to_json,
    search,
)
from circlegeom.disks import (
    Arc,
    Configuration,
    HullBoundary,
    MarginalPair,
    hull_boundary,
    induced_alignment_detailed,
)
from circlegeom.implications import Implication, generate_basis
from circlegeom.representation import (
    VerificationReport,
    verify_by_propositions,
    verify_full,
)
from circlegeom.sets import (
    ConvexGeometry,
    GroundSet,
    subset_decode,
    subset_encode,
    subset_elements,
)
from circlegeom.tikz import export_tikz


class PreconditionFailed(ValueError):
    """Semantically valid request whose operation precondition does not hold."""


class CircleIn(BaseModel):
    label: str
    x: float
    y: float
    r: float = Field(ge=0)


class InduceRequest(BaseModel):
    circles: list[CircleIn]
    include_hulls: bool = False


class VerifyRequest(BaseModel):
    circles: list[CircleIn]
    geometry_id: str | None = None
    family_mask: int | None = None
    by_propositions: bool = False


class HullRequest(BaseModel):
    circles: list[CircleIn]
    subset: str


class TikzRequest(BaseModel):
    circles: list[CircleIn]
    width: float = 8.0


def _configuration(circles: Sequence[CircleIn]) -> Configuration:
    data = {
        "n": len(circles),
        "labels": [c.label for c in circles],
        "circles": [{"label": c.label, "x": c.x, "y": c.y, "r": c.r} for c in circles],
    }
    return configuration_from_json(data)


def _boundary_json(boundary: HullBoundary) -> list[dict]:
    out = []
    for f in boundary.features:
        if isinstance(f, Arc):
            out.append(
                {"type": "arc", "circle": f.circle, "start": f.start, "end": f.end}
            )
        else:
            out.append(
                {
                    "type": "segment",
                    "x1": f.p1[0],
                    "y1": f.p1[1],
                    "x2": f.p2[0],
                    "y2": f.p2[1],
                }
            )
    return out


def _marginal_json(pairs: list[MarginalPair], ground: GroundSet) -> list[dict]:
    return [
        {
            "element": ground.label(p.element),
            "subset": subset_decode(p.subset, ground),
            "margin": p.margin,
        }
        for p in pairs
    ]


def _implications_json(rules: Sequence[Implication], ground: GroundSet) -> list[list[str]]:
    return [
        [subset_decode(r.premise, ground), subset_decode(r.conclusion, ground)]
        for r in rules
    ]


def _report_json(report: VerificationReport, ground: GroundSet) -> dict:
    return {
        "verdict": report.verdict,
        "induced_family_mask": report.induced,
        "induced_closed_sets": [
            subset_decode(m, ground) for m in subset_elements(report.induced)
        ],
        "violated_implications": _implications_json(
            report.violated_implications, ground
        ),
        "non_closed_meet_irreducibles": [
            subset_decode(m, ground) for m in report.non_closed_meet_irreducibles
        ],
        "marginal_pairs": _marginal_json(report.marginal_pairs, ground),
    }


def create_app(records: Sequence[CatalogRecord], frontend_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="circlegeom")
    by_id = {rec.id: rec for rec in records}

    @app.exception_handler(RequestValidationError)
    async def _on_validation(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400, content={"error": "malformed request", "detail": str(exc)}
        )

    @app.exception_handler(PreconditionFailed)
    async def _on_precondition(request: Request, exc: PreconditionFailed):
        return JSONResponse(
            status_code=422, content={"error": "precondition failed", "detail": str(exc)}
        )

    @app.exception_handler(ValueError)
    async def _on_value_error(request: Request, exc: ValueError):
        return JSONResponse(
            status_code=400, content={"error": "malformed request", "detail": str(exc)}
        )

    @app.get("/api/geometries")
    def list_geometries(
        n: int | None = None,
        status: str | None = None,
        cdim: int | None = None,
        unique_atom: bool | None = None,
        unique_coatom: bool | None = None,
        iso_to: int | None = None,
    ):
        pool = [rec for rec in records if n is None or rec.n == n]
        ids = set(
            search(
                pool,
                unique_atom=unique_atom,
                unique_coatom=unique_coatom,
                cdim=cdim,
                iso_to=iso_to,
                status=status,
            )
        )
        return {"geometries": [record_to_json(rec) for rec in pool if rec.id in ids]}

    @app.get("/api/geometries/{record_id}")
    def get_geometry(record_id: str):
        rec = by_id.get(record_id)
        if rec is None:
            return JSONResponse(
                status_code=404,
                content={"error": "not found", "detail": f"no geometry {record_id}"},
            )
        return record_to_json(rec)

    @app.post("/api/induce")
    def induce(req: InduceRequest):
        conf = _configuration(req.circles)
        family, flagged = induced_alignment_detailed(conf)
        out = {
            "n": conf.ground.n,
            "family_mask": family,
            "closed_sets": [
                subset_decode(m, conf.ground) for m in subset_elements(family)
            ],
            "marginal_pairs": _marginal_json(flagged, conf.ground),
        }
        if req.include_hulls:
            out["hulls"] = [
                {
                    "subset": subset_decode(w, conf.ground),
                    "features": _boundary_json(
                        hull_boundary(
                            [conf.circles[i] for i in subset_elements(w)]
                        )
                    ),
                }
                for w in range(1, 1 << conf.ground.n)
            ]
        return out

    @app.post("/api/verify")
    def verify(req: VerifyRequest):
        conf = _configuration(req.circles)
        if (req.geometry_id is None) == (req.family_mask is None):
            raise PreconditionFailed(
                "provide exactly one of geometry_id or family_mask"
            )
        if req.geometry_id is not None:
            rec = by_id.get(req.geometry_id)
            if rec is None:
                return JSONResponse(
                    status_code=404,
                    content={
                        "error": "not found",
                        "detail": f"no geometry {req.geometry_id}",
                    },
                )
            if rec.n != conf.ground.n:
                raise PreconditionFailed(
                    f"{rec.id} is on {rec.n} elements, configuration has {conf.ground.n}"
                )
            geometry = rec.geometry
        else:
            try:
                geometry = ConvexGeometry(conf.ground, req.family_mask)
            except ValueError as exc:
                raise PreconditionFailed(str(exc)) from exc
        if req.by_propositions:
            report = verify_by_propositions(geometry, generate_basis(geometry), conf)
        else:
            report = verify_full(geometry, conf)
        return _report_json(report, conf.ground)

    @app.post("/api/hull")
    def hull(req: HullRequest):
        conf = _configuration(req.circles)
        subset = subset_encode(req.subset, conf.ground)
        if subset == 0:
            raise PreconditionFailed("subset must be nonempty")
        boundary = hull_boundary([conf.circles[i] for i in subset_elements(subset)])
        return {"subset": subset_decode(subset, conf.ground), "features": _boundary_json(boundary)}

    @app.post("/api/tikz")
    def tikz(req: TikzRequest):
        conf = _configuration(req.circles)
        if req.width <= 0:
            raise PreconditionFailed("width must be positive")
        return PlainTextResponse(export_tikz(conf, req.width))

    if frontend_dir is not None and Path(frontend_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(frontend_dir), html=True), name="ui")

    return app


def serve(
    records: Sequence[CatalogRecord],
    port: int = 8437,
    frontend_dir: str | Path | None = None,
) -> None:
    """Run the service until interrupted."""
    import uvicorn

    uvicorn.run(create_app(records, frontend_dir), host="127.0.0.1", port=port)
