"""Edit sensitivity of string compressors and repetitiveness measures."""

from .text_core import (DEFAULT_POLICY, AlphabetPolicy, EditOp, ExactResult, Inconclusive, Text,
                        apply_edit, canonicalize, enumerate_edits)

__all__ = [
    "AlphabetPolicy", "DEFAULT_POLICY", "EditOp", "ExactResult", "Inconclusive", "Text",
    "apply_edit", "canonicalize", "enumerate_edits",
]

__version__ = "0.1.0"
