"""HTTP service exposing the computations; the CLI is a thin client of it."""

from .app import app

__all__ = ["app"]
