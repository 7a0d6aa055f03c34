"""Stateless JSON-over-HTTP facade over the classification engine.

Three routes: POST /api/classify, POST /api/bestmove, GET /api/health.
Handlers are pure over the request body, so identical requests always
produce identical responses and arbitrary concurrency is safe.  Client
errors come back as 400 with a stable {code, message} document.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import __version__
from .wire import RequestError, bestmove_payload, classify_payload, parse_request


async def _json_body(request: Request) -> object:
    try:
        return await request.json()
    except (json.JSONDecodeError, UnicodeDecodeError):
        raise RequestError("invalid_body", "request body must be valid JSON") from None


def create_app(static_dir: str | None = None, cors_origins: tuple[str, ...] = ("*",)) -> FastAPI:
    """Build the application.

    ``static_dir`` optionally mounts a built playground at the web root so
    one process can serve both API and UI.  ``cors_origins`` defaults to
    permissive so a dev-server playground on another port can call the API.
    """
    app = FastAPI(title="greedynim", docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["GET", "POST"],
        allow_headers=["Content-Type"],
    )

    @app.exception_handler(RequestError)
    async def _client_error(_request: Request, exc: RequestError) -> JSONResponse:
        return JSONResponse(exc.to_dict(), status_code=400)

    @app.get("/api/health")
    async def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/api/classify")
    async def classify_route(request: Request) -> dict:
        spec, pos = parse_request(await _json_body(request))
        return classify_payload(spec, pos)

    @app.post("/api/bestmove")
    async def bestmove_route(request: Request) -> dict:
        spec, pos = parse_request(await _json_body(request))
        return bestmove_payload(spec, pos)

    if static_dir is not None:
        root = Path(static_dir)
        if not root.is_dir():
            raise ValueError(f"static dir not found: {static_dir}")
        app.mount("/", StaticFiles(directory=root, html=True), name="static")

    return app
