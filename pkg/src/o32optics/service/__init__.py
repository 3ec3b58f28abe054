"""FastAPI service wrapping the core verification and state toolkit."""

from .app import app

__all__ = ["app"]
