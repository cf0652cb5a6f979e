# src/verify/__init__.py

from src.verify.suites import DEFAULT_RANGES, SUITES, SuiteResult, parse_int_range, run_suite
from src.verify.words import diagonal_word, enumerate_words, handle_insertion, random_word

__all__ = [
    "DEFAULT_RANGES",
    "SUITES",
    "SuiteResult",
    "diagonal_word",
    "enumerate_words",
    "handle_insertion",
    "parse_int_range",
    "random_word",
    "run_suite",
]
