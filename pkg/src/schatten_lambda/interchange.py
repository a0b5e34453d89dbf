"""Matrix interchange format.

JSON object {"rows": n, "cols": m, "re": [[...]], "im": [[...]]} with row-major
nested lists; "im" is optional and defaults to zero.  Written files re-parse
to bit-identical doubles.
"""

from __future__ import annotations

import json
import os

import numpy as np

from .errors import FormatError
from .linalg import MAX_DIM


def _check_grid(grid, rows: int, cols: int, name: str) -> None:
    if not isinstance(grid, list) or len(grid) != rows:
        raise FormatError(f'"{name}" must be a list of {rows} rows')
    for row in grid:
        if not isinstance(row, list) or len(row) != cols:
            raise FormatError(f'every "{name}" row must have {cols} entries')
        for x in row:
            if isinstance(x, bool) or not isinstance(x, (int, float)):
                raise FormatError(f'"{name}" entries must be numbers')


def matrix_from_dict(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise FormatError("matrix document must be a JSON object")
    try:
        rows = obj["rows"]
        cols = obj["cols"]
        re = obj["re"]
    except KeyError as missing:
        raise FormatError(f"missing required key {missing}") from None
    if not isinstance(rows, int) or not isinstance(cols, int):
        raise FormatError('"rows" and "cols" must be integers')
    if rows < 1 or cols < 1 or rows > MAX_DIM or cols > MAX_DIM:
        raise FormatError(f"dimensions must be in [1, {MAX_DIM}]")
    _check_grid(re, rows, cols, "re")
    a = np.array(re, dtype=float)
    im = obj.get("im")
    if im is not None:
        _check_grid(im, rows, cols, "im")
        a = a + 1j * np.array(im, dtype=float)
    a = a.astype(np.complex128)
    if not np.isfinite(a).all():
        raise FormatError("matrix entries must be finite")
    return a


def matrix_to_dict(a: np.ndarray) -> dict:
    a = np.asarray(a, dtype=np.complex128)
    out = {
        "rows": int(a.shape[0]),
        "cols": int(a.shape[1]),
        "re": [[float(x) for x in row] for row in a.real],
    }
    if np.any(a.imag != 0.0):
        out["im"] = [[float(x) for x in row] for row in a.imag]
    return out


def load_matrix(path: str | os.PathLike) -> np.ndarray:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None
    return matrix_from_dict(obj)


def save_matrix(path: str | os.PathLike, a: np.ndarray) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_dict(a), fh, indent=2)
        fh.write("\n")
