# src/critical/__init__.py

from src.critical.algorithms import algorithm_I, algorithm_II, find_1_critical
from src.critical.base import CriticalDetector, CriticalFinding, ReductionTrace, TraceStep
from src.critical.diamonds import BetaDetector, GammaDetector, detect_beta, detect_gamma
from src.critical.ladders import (
    DeltaDetector,
    EtaDetector,
    detect_delta,
    detect_eta,
    is_mobius_ladder,
    is_neckband,
)
from src.critical.loops import AlphaDetector, detect_alpha

__all__ = [
    "AlphaDetector",
    "BetaDetector",
    "CriticalDetector",
    "CriticalFinding",
    "DeltaDetector",
    "EtaDetector",
    "GammaDetector",
    "ReductionTrace",
    "TraceStep",
    "algorithm_I",
    "algorithm_II",
    "detect_alpha",
    "detect_beta",
    "detect_delta",
    "detect_eta",
    "detect_gamma",
    "find_1_critical",
    "is_mobius_ladder",
    "is_neckband",
]
