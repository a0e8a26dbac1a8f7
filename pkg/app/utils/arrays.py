"""
Array helpers shared by the schema layer.
"""
from __future__ import annotations

from typing import Any

import numpy as np


def readonly_array(values: Any, dtype: Any = float) -> np.ndarray:
    """Copy values into a new numpy array and mark it read-only."""
    arr = np.array(values, dtype=dtype, copy=True)
    arr.setflags(write=False)
    return arr

