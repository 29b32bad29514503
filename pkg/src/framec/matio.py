"""Reading and writing matrices as CSV or JSON files.

CSV is real-only: one row per line, comma-separated decimal entries.
JSON carries {"rows": r, "cols": c, "data": [...]} with row-major data;
complex entries are two-element [re, im] arrays.  Writing uses repr()
floats, so both formats round-trip exactly.
"""

from __future__ import annotations

import json
import os

import numpy as np

from .errors import MixedField, ParseError
from .linalg import as_matrix


def _infer_format(path: str, fmt: str | None) -> str:
    if fmt is not None:
        if fmt not in ("csv", "json"):
            raise ParseError(f"unknown matrix format {fmt!r}")
        return fmt
    ext = os.path.splitext(path)[1].lower()
    return "json" if ext == ".json" else "csv"


def _parse_csv(text: str) -> np.ndarray:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = []
        for tok in line.split(","):
            tok = tok.strip()
            try:
                row.append(float(tok))
            except ValueError:
                try:
                    complex(tok)
                except ValueError:
                    raise ParseError(
                        f"line {lineno}: bad entry {tok!r}") from None
                raise MixedField(
                    f"line {lineno}: complex entry {tok!r} in CSV; "
                    "use JSON for complex matrices") from None
        rows.append(row)
    if not rows:
        raise ParseError("no rows in CSV input")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ParseError("ragged CSV rows")
    return np.array(rows, dtype=np.float64)


def _parse_json(text: str) -> np.ndarray:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return matrix_from_jsonable(obj)


def matrix_from_jsonable(obj) -> np.ndarray:
    """Decode the {"rows", "cols", "data"} matrix object."""
    if not isinstance(obj, dict):
        raise ParseError("JSON matrix must be an object")
    try:
        rows, cols, data = int(obj["rows"]), int(obj["cols"]), obj["data"]
    except (KeyError, TypeError, ValueError):
        raise ParseError(
            "JSON matrix needs integer 'rows', 'cols' and a 'data' list"
        ) from None
    if rows < 1 or cols < 1:
        raise ParseError("rows and cols must be at least 1")
    if not isinstance(data, list) or len(data) != rows * cols:
        raise ParseError(f"'data' must list {rows * cols} entries")
    entries = []
    is_complex = False
    for e in data:
        if isinstance(e, (int, float)) and not isinstance(e, bool):
            entries.append(complex(e))
        elif (isinstance(e, list) and len(e) == 2
              and all(isinstance(p, (int, float)) and not isinstance(p, bool)
                      for p in e)):
            entries.append(complex(e[0], e[1]))
            is_complex = True
        else:
            raise ParseError(f"bad matrix entry {e!r}")
    arr = np.array(entries, dtype=np.complex128).reshape(rows, cols)
    return arr if is_complex else arr.real.copy()


def matrix_to_jsonable(m) -> dict:
    """Encode a matrix as the {"rows", "cols", "data"} object."""
    m = as_matrix(m)
    if np.iscomplexobj(m):
        data = [[float(e.real), float(e.imag)] for e in m.ravel()]
    else:
        data = [float(e) for e in m.ravel()]
    return {"rows": int(m.shape[0]), "cols": int(m.shape[1]), "data": data}


def read_matrix(path: str, fmt: str | None = None) -> np.ndarray:
    """Read a matrix file; format inferred from the extension by default."""
    fmt = _infer_format(path, fmt)
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    m = _parse_csv(text) if fmt == "csv" else _parse_json(text)
    return as_matrix(m)


def write_matrix(m, path: str, fmt: str | None = None) -> None:
    """Write a matrix file; complex data is JSON-only."""
    m = as_matrix(m)
    fmt = _infer_format(path, fmt)
    if fmt == "csv":
        if np.iscomplexobj(m):
            raise MixedField("complex matrix cannot be written as CSV")
        text = "\n".join(",".join(repr(float(e)) for e in row) for row in m)
        text += "\n"
    else:
        text = json.dumps(matrix_to_jsonable(m)) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
