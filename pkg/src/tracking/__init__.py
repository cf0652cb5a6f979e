# src/tracking/__init__.py

from src.tracking.budget import EnumerationBudget, EnumerationUsage
from src.tracking.progress import ProgressTracker, RunProgress

__all__ = [
    "EnumerationBudget",
    "EnumerationUsage",
    "ProgressTracker",
    "RunProgress",
]
