"""HTTP service exposing the analysis package (``uvicorn relgames.service:app``)."""

from .app import app

__all__ = ["app"]
