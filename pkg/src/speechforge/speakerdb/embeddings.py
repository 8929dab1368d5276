"""Unit-norm embedding vectors and cosine scoring.

Embedding values come from upstream extractor models via adapters; only the
geometry lives here. Vectors are float64 numpy arrays normalized to unit
length within 1e-9.
"""

from __future__ import annotations

import numpy as np

from speechforge.errors import DimensionMismatchError

DEFAULT_DIM = 192
_NORM_TOL = 1e-9


def normalized(vector: "np.ndarray | list[float]") -> np.ndarray:
    """Return the unit-norm float64 copy of ``vector``."""
    arr = np.asarray(vector, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"embedding must be 1-d, got shape {arr.shape}")
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return arr / norm


def check_unit(vector: np.ndarray) -> np.ndarray:
    arr = np.asarray(vector, dtype=np.float64)
    norm = float(np.linalg.norm(arr))
    if abs(norm - 1.0) > _NORM_TOL:
        raise ValueError(f"embedding norm {norm} is not 1 within {_NORM_TOL}")
    return arr


def score(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine similarity of two unit-norm embeddings, clamped to [-1, 1]."""
    a = check_unit(a)
    b = check_unit(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(
            f"embedding dimensions differ: {a.shape[0]} vs {b.shape[0]}"
        )
    return float(np.clip(np.dot(a, b), -1.0, 1.0))
