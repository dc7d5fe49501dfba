"""JSON encoding used by the command line front end.

Complex numbers are ``[re, im]`` pairs, matrices are row-major nested lists,
floats are written with 17 significant digits so that reports are
reproducible byte for byte.
"""

from __future__ import annotations

import json
import math
from typing import Any

import numpy as np

from .errors import InputError

__all__ = ["dumps", "complex_value", "complex_array", "encode_complex"]


def _float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    s = format(x, ".17g")
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"
    return s


def _encode(obj: Any, indent: int, level: int) -> str:
    pad = "\n" + " " * (indent * (level + 1))
    end = "\n" + " " * (indent * level)
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return "null" if obj is None else ("true" if obj else "false")
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _float(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return _encode([obj.real, obj.imag], indent, level)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        return _encode(encode_complex(obj) if np.iscomplexobj(obj) else obj.tolist(),
                       indent, level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{json.dumps(str(k))}: {_encode(v, indent, level + 1)}"
                 for k, v in obj.items()]
        return "{" + pad + ("," + pad).join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        parts = [_encode(v, indent, level + 1) for v in obj]
        # short numeric rows stay on one line
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in obj) or \
                all(isinstance(v, (complex, np.complexfloating)) for v in obj):
            return "[" + ", ".join(parts) + "]"
        return "[" + pad + ("," + pad).join(parts) + end + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj: Any, indent: int = 1) -> str:
    return _encode(obj, indent, 0) + "\n"


def encode_complex(a) -> list:
    """Nested ``[re, im]`` lists for a complex array of any shape."""
    a = np.asarray(a, dtype=complex)
    return np.stack([a.real, a.imag], axis=-1).tolist()


def complex_value(v, field: str = "value") -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    try:
        re, im = v
        return complex(float(re), float(im))
    except (TypeError, ValueError) as exc:
        raise InputError(f"{field}: expected [re, im], got {v!r}") from exc


def complex_array(v, field: str = "values") -> np.ndarray:
    """Decode nested ``[re, im]`` lists (innermost length 2) to a complex array."""
    try:
        a = np.asarray(v, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{field}: not a rectangular numeric array") from exc
    if a.ndim == 0 or a.shape[-1] != 2:
        raise InputError(f"{field}: innermost entries must be [re, im] pairs")
    return a[..., 0] + 1j * a[..., 1]
