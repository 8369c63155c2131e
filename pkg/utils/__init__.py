# Utils Package
"""Utility modules for the gap-bound reproducer."""
from .run_logger import RunLogger

__all__ = [
    "RunLogger",
]
