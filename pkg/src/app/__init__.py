"""Command-line surface and report rendering."""
from .cli import build_parser, run
from .reports import poset_stats, render, size_frame, stats_frame

__all__ = ["build_parser", "poset_stats", "render", "run", "size_frame", "stats_frame"]
