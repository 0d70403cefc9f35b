"""Stateless JSON service exposing mutation, relations, typecheck and class
enumeration over HTTP.  Errors use a machine-readable envelope
{"code", "message", "detail"}."""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .config import effective_budget
from .mutation_class import enumerate_class, is_finite_cluster_type
from .path_algebra import CompletionBudgetExceeded, algebra_report, build_rewrite_system
from .quiver import Quiver, QuiverFormatError, UnknownVertexError, mutate
from .relations import ThreeOrMoreShortestPaths, synthesize_relations


class _RequestError(Exception):
    def __init__(self, status: int, code: str, message: str, detail=None):
        self.status = status
        self.envelope = {"code": code, "message": message, "detail": detail}
        super().__init__(message)


def _error(status: int, code: str, message: str, detail=None) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"code": code, "message": message, "detail": detail},
    )


async def _payload(request: Request) -> dict:
    try:
        body = await request.body()
        data = json.loads(body)
    except json.JSONDecodeError as exc:
        raise _RequestError(400, "malformed-body", f"body is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise _RequestError(400, "malformed-body", "body must be a JSON object")
    return data


def _quiver_of(payload: dict) -> Quiver:
    try:
        return Quiver.from_json_dict(payload.get("quiver"))
    except QuiverFormatError as exc:
        raise _RequestError(400, "bad-quiver", str(exc))


def _budget_of(payload: dict) -> int:
    budget = payload.get("budget")
    if budget is None:
        return effective_budget()
    if not isinstance(budget, int) or isinstance(budget, bool) or budget < 1:
        raise _RequestError(400, "bad-budget", "budget must be a positive integer")
    return budget


def create_app() -> FastAPI:
    app = FastAPI(title="cqt", docs_url=None, redoc_url=None)

    @app.exception_handler(_RequestError)
    async def _handle(_, exc: _RequestError):
        return JSONResponse(status_code=exc.status, content=exc.envelope)

    @app.get("/api/health")
    async def health() -> PlainTextResponse:
        return PlainTextResponse("ok")

    @app.post("/api/mutate")
    async def api_mutate(request: Request) -> JSONResponse:
        payload = await _payload(request)
        q = _quiver_of(payload)
        vertex = payload.get("vertex")
        if not isinstance(vertex, str):
            raise _RequestError(400, "bad-vertex", 'request needs a string "vertex"')
        try:
            result = mutate(q, vertex)
        except UnknownVertexError as exc:
            raise _RequestError(400, "unknown-vertex", str(exc))
        return JSONResponse({"quiver": result.to_json_dict()})

    @app.post("/api/relations")
    async def api_relations(request: Request) -> JSONResponse:
        payload = await _payload(request)
        q = _quiver_of(payload)
        force = bool(payload.get("force", False))
        if not force:
            verdict = is_finite_cluster_type(q, _budget_of(payload))
            if not verdict.is_finite:
                return _error(
                    422,
                    "infinite-type",
                    "quiver is not of finite cluster type; pass force to synthesize anyway",
                    verdict.to_json_dict(),
                )
        try:
            rels = synthesize_relations(q)
        except ValueError as exc:
            raise _RequestError(400, "bad-quiver", str(exc))
        except ThreeOrMoreShortestPaths as exc:
            return _error(
                422,
                "three-or-more-shortest-paths",
                str(exc),
                {"arrow": {"from": exc.arrow[0], "to": exc.arrow[1]}},
            )
        try:
            report = algebra_report(build_rewrite_system(q, rels))
        except CompletionBudgetExceeded as exc:
            return _error(422, "completion-budget-exceeded", str(exc))
        return JSONResponse({"relations": rels.to_json_dict(), "report": report})

    @app.post("/api/typecheck")
    async def api_typecheck(request: Request) -> JSONResponse:
        payload = await _payload(request)
        q = _quiver_of(payload)
        verdict = is_finite_cluster_type(q, _budget_of(payload))
        return JSONResponse(verdict.to_json_dict())

    @app.post("/api/class")
    async def api_class(request: Request) -> JSONResponse:
        payload = await _payload(request)
        q = _quiver_of(payload)
        cls = enumerate_class(q, _budget_of(payload))
        out = cls.to_json_dict()
        out["count"] = len(cls)
        return JSONResponse(out)

    return app


app = create_app()
