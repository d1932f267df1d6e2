"""Figure rendering for oam-mzi CSV exports."""

from .render import FigureSpec, SchemaError, load_csv, render

__all__ = ["FigureSpec", "SchemaError", "load_csv", "render"]
__version__ = "0.1.0"
