"""Normalizer and linter for Tunisian Arabic written in NOTA orthography."""

from ._core import (
    AppliedFix,
    ConfigError,
    Diagnostic,
    LexiconError,
    Normalizer,
    PassCapExceeded,
    RomanizeError,
    RunResult,
    TranslitError,
    canonicalize,
    normalize,
    romanize,
    strip_diacritics,
    transliterate,
)

__all__ = [
    "AppliedFix",
    "ConfigError",
    "Diagnostic",
    "LexiconError",
    "Normalizer",
    "PassCapExceeded",
    "RomanizeError",
    "RunResult",
    "TranslitError",
    "canonicalize",
    "normalize",
    "romanize",
    "strip_diacritics",
    "transliterate",
]
