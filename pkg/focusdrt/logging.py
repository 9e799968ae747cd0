"""Rich-backed logging and progress reporting."""

import logging
from typing import Iterable, Optional, TypeVar

from rich.console import Console
from rich.logging import RichHandler
from rich.progress import track as rich_track

T = TypeVar("T")

# Logs and progress bars go to stderr; stdout carries bindings, traces and renders only
console = Console(stderr=True)


def setup_logging(level: str) -> None:
    """Route all focusdrt logging through a single rich handler at `level`."""
    root_logger = logging.getLogger()
    root_logger.setLevel(level.upper())

    handler = RichHandler(console=console, rich_tracebacks=True, show_path=False)
    handler.setFormatter(logging.Formatter("%(message)s"))

    # Repeated CLI invocations in one process (tests) must not stack handlers
    root_logger.handlers.clear()
    root_logger.addHandler(handler)


def track(
    items: Iterable[T], total: Optional[int] = None, description: str = "Working..."
) -> Iterable[T]:
    """Wrap rich's track function to use the shared stderr console."""
    return rich_track(items, total=total, description=description, console=console, transient=True)
