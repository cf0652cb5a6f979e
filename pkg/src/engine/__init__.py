# src/engine/__init__.py

from src.engine.report import GenusReport
from src.engine.search import is_upper_embeddable, max_genus_exhaustive

__all__ = [
    "GenusReport",
    "is_upper_embeddable",
    "max_genus_exhaustive",
]
