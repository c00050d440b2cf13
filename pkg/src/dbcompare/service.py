"""Stateless JSON query service over the precomputed instance set.

The full instance set is generated once at startup and shared read-only;
each request reduces to filter + nondominate (or a chart render), so the
interactive explorer stays responsive.  Identical request bodies yield
identical responses for a fixed catalog.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import List, Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from . import __version__
from .attributes import DEFAULT_MEMORY_TOLERANCE_BITS
from .catalog import (ALL_PROTOCOL_IDS, DESCRIPTORS, GlobalConstants,
                      generate_instances)
from .charts import SpiderAxisConfig, emit_spider
from .config import RunConfig, build_instances
from .pareto import MafiaBound, pareto_pipeline
from .reporting import scale_memory, scale_security_log2, scaled_row


class ParetoRequest(BaseModel):
    y: str
    protocols: Optional[List[str]] = None
    constants: Optional[dict] = None


class SpiderRequest(BaseModel):
    instance_ids: List[str]
    normalization: Optional[str] = None


def canonical_pareto_payload(instances, bound: MafiaBound,
                             protocols=None,
                             memory_tolerance_bits=DEFAULT_MEMORY_TOLERANCE_BITS) -> dict:
    """The one pareto serialization shared by the CLI and the HTTP API."""
    _, solution, rows = pareto_pipeline(
        instances, bound, protocols=protocols,
        memory_tolerance_bits=memory_tolerance_bits)
    srows = [scaled_row(r).as_dict() for r in rows]
    totals = {r.protocol: r.total for r in rows}
    return {"y": bound.label(), "rows": srows, "totals": totals,
            "member_ids": solution.ids()}


def instance_payload(inst) -> dict:
    v = inst.vector
    return {
        "id": inst.id,
        "protocol": inst.protocol,
        "params": {k: val for k, val in inst.params},
        "raw": {
            "p_m": v.p_m.value, "p_d": v.p_d.value, "p_t": v.p_t.value,
            "log2_p_m": v.p_m.log2, "log2_p_d": v.p_d.log2,
            "log2_p_t": v.p_t.log2,
            "e": v.e, "c": v.c, "m": v.m, "s": v.s, "b": v.b,
        },
        "scaled": {
            "p_m": _pow2(v.p_m), "p_d": _pow2(v.p_d), "p_t": _pow2(v.p_t),
            "m_kb": scale_memory(v.m),
        },
    }


def _pow2(p) -> str:
    k = scale_security_log2(p)
    return "0" if math.isinf(k) else f"2^{int(k)}"


class EngineState:
    """Immutable instance cache plus request-scoped regeneration."""

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or RunConfig()
        self.instances = build_instances(self.config)
        self.by_id = {inst.id: inst for inst in self.instances}
        self.memory_tolerance = self.config.memory_tolerance_bits

    @lru_cache(maxsize=8)
    def _with_constants(self, delta: int, sigma: int):
        return generate_instances(self.config.protocols,
                                  GlobalConstants(delta=delta, sigma=sigma))

    def instances_for(self, constants: Optional[dict]):
        tolerance = self.memory_tolerance
        if not constants:
            return self.instances, tolerance
        known = {"delta", "sigma", "memory_tolerance_bits"}
        unknown = set(constants) - known
        if unknown:
            raise HTTPException(400, f"unknown constants {sorted(unknown)}")
        delta = int(constants.get("delta", self.config.delta))
        sigma = int(constants.get("sigma", self.config.sigma))
        tolerance = int(constants.get("memory_tolerance_bits", tolerance))
        if delta <= 0 or sigma <= 0 or tolerance <= 0:
            raise HTTPException(422, "constants must be positive")
        if (delta, sigma) == (self.config.delta, self.config.sigma):
            return self.instances, tolerance
        return self._with_constants(delta, sigma), tolerance


def create_app(state: Optional[EngineState] = None) -> FastAPI:
    state = state or EngineState()
    app = FastAPI(title="distance-bounding comparison service",
                  version=__version__)

    @app.get("/api/protocols")
    def protocols():
        out = []
        for pid in ALL_PROTOCOL_IDS:
            d = DESCRIPTORS[pid]
            out.append({
                "id": pid,
                "params": list(d.param_names),
                "grid_size": len(d.grid),
                "provenance": d.provenance,
                "notes": d.notes,
            })
        return {"protocols": out}

    @app.get("/api/instances")
    def instances(protocol: str = Query(...), offset: int = 0,
                  limit: int = Query(200, le=2000)):
        if protocol not in ALL_PROTOCOL_IDS:
            raise HTTPException(404, f"unknown protocol {protocol!r}")
        if offset < 0 or limit < 0:
            raise HTTPException(400, "offset and limit must be nonnegative")
        pool = [i for i in state.instances if i.protocol == protocol]
        page = pool[offset:offset + limit]
        return {"protocol": protocol, "total": len(pool), "offset": offset,
                "items": [instance_payload(i) for i in page]}

    @app.post("/api/pareto")
    def pareto(req: ParetoRequest):
        try:
            bound = MafiaBound.parse(req.y)
        except ValueError as exc:
            detail = str(exc)
            status = 422 if ("out of" in detail or "above 1" in detail) else 400
            raise HTTPException(status, detail)
        if req.protocols is not None:
            unknown = [p for p in req.protocols if p not in ALL_PROTOCOL_IDS]
            if unknown:
                raise HTTPException(404, f"unknown protocols {unknown}")
        pool, tolerance = state.instances_for(req.constants)
        return canonical_pareto_payload(pool, bound, req.protocols, tolerance)

    @app.get("/api/instance/{instance_id:path}")
    def instance(instance_id: str):
        inst = state.by_id.get(instance_id)
        if inst is None:
            raise HTTPException(404, f"unknown instance id {instance_id!r}")
        return instance_payload(inst)

    @app.post("/api/chart/spider")
    def spider(req: SpiderRequest):
        if not (1 <= len(req.instance_ids) <= 6):
            raise HTTPException(400, "select between 1 and 6 instances")
        insts = []
        for iid in req.instance_ids:
            inst = state.by_id.get(iid)
            if inst is None:
                raise HTTPException(404, f"unknown instance id {iid!r}")
            insts.append(inst)
        norm = None
        if req.normalization:
            norm = state.by_id.get(req.normalization)
            if norm is None:
                raise HTTPException(404, f"unknown normalization instance "
                                         f"{req.normalization!r}")
        svg = emit_spider(insts, normalization=norm)
        return Response(content=svg, media_type="image/svg+xml")

    @app.exception_handler(ValueError)
    def value_error(_, exc):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    _mount_explorer(app)
    return app


def _mount_explorer(app: FastAPI):
    """Serve the built explorer UI when its static bundle is present."""
    from pathlib import Path

    from fastapi.staticfiles import StaticFiles

    for candidate in (Path(__file__).resolve().parents[2] / "frontend" / "dist",
                      Path.cwd() / "frontend" / "dist"):
        if candidate.is_dir():
            app.mount("/", StaticFiles(directory=str(candidate), html=True),
                      name="explorer")
            break
