"""Selects the compiled kernel when present, else the Python fallback."""

try:
    from cbgraph._kernel import (
        canonical_cyclic,
        cyclic_reduce,
        min_rotation,
        reverse_word,
    )

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    from cbgraph._kernel_py import (
        canonical_cyclic,
        cyclic_reduce,
        min_rotation,
        reverse_word,
    )

    BACKEND = "python"

__all__ = [
    "canonical_cyclic",
    "cyclic_reduce",
    "min_rotation",
    "reverse_word",
    "BACKEND",
]
