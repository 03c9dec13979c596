"""Deterministic visual and structured views of puzzle state."""

from .images import RenderedImage, Theme, render_image
from .views import StructuredObservation, manual_text, solver_view

__all__ = [
    "RenderedImage",
    "StructuredObservation",
    "Theme",
    "manual_text",
    "render_image",
    "solver_view",
]
