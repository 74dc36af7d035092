"""Client for the offsetgrid service.

Talks HTTP to a remote server when given a base URL; otherwise drives the
FastAPI app in-process through its ASGI interface, so the CLI works without
a running server while exercising the same request/response surface.
"""

from __future__ import annotations

import warnings
from typing import Any, Optional

import httpx


class ServiceClient:
    def __init__(self, base_url: Optional[str] = None):
        if base_url:
            self._client = httpx.Client(base_url=base_url, timeout=None)
        else:
            with warnings.catch_warnings():
                # some starlette builds warn about their test-client backend
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service.app import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict[str, Any]) -> httpx.Response:
        return self._client.post(path, json=payload)

    def get(self, path: str) -> httpx.Response:
        return self._client.get(path)

    def close(self) -> None:
        self._client.close()

    def __enter__(self) -> "ServiceClient":
        return self

    def __exit__(self, *exc) -> None:
        self.close()
