"""JSON tensor files, permutations and polynomial text.

Tensor files hold ``{"shape": [...], "re": [...], "im": [...]}`` with the
flattened entries in row-major order; ``"im"`` is optional.  Floats are
written with their shortest round-trip repr, so a write/read cycle is
bit-exact.  A bare nested list of numbers is also accepted on input.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import ParseError
from .groebner.poly import to_fraction
from .tensor import DenseTensor, as_array

__all__ = [
    "tensor_to_json",
    "tensor_from_json",
    "read_tensor",
    "write_tensor",
    "read_rational_tensor",
    "parse_permutation",
    "dump_json",
]


def _needs_imag(im: np.ndarray) -> bool:
    return bool(np.any(im != 0) or np.any(np.signbit(im)))


def tensor_to_json(T) -> dict:
    a = as_array(T)
    out = {"shape": [int(d) for d in a.shape], "re": [float(x) for x in a.real.ravel()]}
    if _needs_imag(a.imag):
        out["im"] = [float(x) for x in a.imag.ravel()]
    return out


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _flat_numbers(values, what: str) -> list:
    if not isinstance(values, list) or not all(_is_number(v) for v in values):
        raise ParseError(f'"{what}" must be a flat list of numbers')
    return values


def _nested_shape(obj) -> tuple[int, ...]:
    if _is_number(obj):
        return ()
    if not isinstance(obj, list) or not obj:
        raise ParseError("nested tensor lists must be non-empty lists of numbers")
    inner = [_nested_shape(x) for x in obj]
    if any(s != inner[0] for s in inner):
        raise ParseError("nested tensor lists are ragged")
    return (len(obj),) + inner[0]


def _parse_layout(obj) -> tuple[tuple[int, ...], list, list | None]:
    if isinstance(obj, list):
        shape = _nested_shape(obj)
        if not shape:
            raise ParseError("a tensor needs order >= 1")
        flat = np.array(obj, dtype=object).ravel().tolist()
        return shape, flat, None
    if not isinstance(obj, dict):
        raise ParseError("tensor JSON must be an object or a nested list")
    unknown = set(obj) - {"shape", "re", "im"}
    if unknown:
        raise ParseError(f"unexpected tensor keys {sorted(unknown)}")
    if "shape" not in obj or "re" not in obj:
        raise ParseError('tensor JSON needs "shape" and "re"')
    shape = obj["shape"]
    if (
        not isinstance(shape, list)
        or not shape
        or not all(isinstance(d, int) and not isinstance(d, bool) and d >= 1 for d in shape)
    ):
        raise ParseError('"shape" must be a non-empty list of positive integers')
    size = math.prod(shape)
    re = _flat_numbers(obj["re"], "re")
    im = _flat_numbers(obj["im"], "im") if "im" in obj else None
    if len(re) != size or (im is not None and len(im) != size):
        raise ParseError(f"entry count does not match shape {shape} ({size} entries)")
    return tuple(shape), re, im


def tensor_from_json(obj) -> DenseTensor:
    shape, re, im = _parse_layout(obj)
    arr = np.empty(len(re), dtype=np.complex128)
    arr.real = np.array(re, dtype=np.float64)
    arr.imag = np.array(im, dtype=np.float64) if im is not None else 0.0
    return DenseTensor._wrap(arr.reshape(shape))


def read_rational_tensor(path) -> np.ndarray:
    """Read a real tensor file into an object array of exact Fractions."""
    obj = _load(path)
    shape, re, im = _parse_layout(obj)
    if im is not None and any(v != 0 for v in im):
        raise ParseError("rational input must be real")
    return np.array([to_fraction(v) for v in re], dtype=object).reshape(shape)


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc


def read_tensor(path) -> DenseTensor:
    return tensor_from_json(_load(path))


def dump_json(obj) -> str:
    """Deterministic JSON text (sorted keys, fixed separators, trailing newline)."""

    def default(x):
        if isinstance(x, Fraction):
            return str(x)
        if isinstance(x, np.generic):
            return x.item()
        raise TypeError(f"cannot serialize {type(x).__name__}")

    return json.dumps(obj, sort_keys=True, separators=(", ", ": "), default=default) + "\n"


def write_tensor(path, T) -> None:
    Path(path).write_text(dump_json(tensor_to_json(T)), encoding="utf-8")


def parse_permutation(obj) -> tuple[int, ...]:
    """One-line notation from a list or an object with a "sigma" list."""
    if isinstance(obj, dict):
        if "sigma" not in obj:
            raise ParseError('permutation objects need a "sigma" list')
        obj = obj["sigma"]
    if isinstance(obj, str):
        try:
            obj = [int(x) for x in obj.replace(",", " ").split()]
        except ValueError as exc:
            raise ParseError(f"bad permutation text {obj!r}") from exc
    if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
        raise ParseError("a permutation is a list of integers")
    if sorted(obj) != list(range(1, len(obj) + 1)):
        raise ParseError(f"{obj} is not a permutation of 1..{len(obj)}")
    return tuple(obj)
