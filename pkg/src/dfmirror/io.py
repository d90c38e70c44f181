"""Text formats for matrices, vectors, and delimited output records.

A matrix document is ``{"n": 3, "values": [...]}`` with the entries in
row-major order; a vector document is a flat JSON array. Several points may
be given as an array of arrays. Floats are written with 17 significant
digits so they round-trip exactly.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

import numpy as np


class ParseError(ValueError):
    pass


def fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def record(*fields) -> str:
    out = []
    for f in fields:
        if isinstance(f, np.ndarray):
            out.extend(fmt(v) for v in f.ravel())
        elif isinstance(f, (list, tuple)):
            out.extend(fmt(v) for v in f)
        else:
            out.append(fmt(f))
    return ",".join(out)


def _load(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _floats(values, path) -> np.ndarray:
    try:
        arr = np.array(values, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: values must be numbers") from exc
    return arr


def read_matrix(path) -> np.ndarray:
    doc = _load(path)
    if not isinstance(doc, dict) or "n" not in doc or "values" not in doc:
        raise ParseError(f'{path}: expected an object with "n" and "values"')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f'{path}: "n" must be a positive integer')
    vals = _floats(doc["values"], path)
    if vals.ndim != 1:
        raise ParseError(f'{path}: "values" must be a flat array')
    if vals.size != n * n:
        raise ParseError(f'{path}: expected {n * n} values, found {vals.size}')
    return vals.reshape(n, n)


def read_vector(path) -> np.ndarray:
    doc = _load(path)
    if not isinstance(doc, list):
        raise ParseError(f"{path}: expected a JSON array")
    arr = _floats(doc, path)
    if arr.ndim not in (1, 2) or arr.size == 0:
        raise ParseError(f"{path}: expected a flat array or an array of arrays")
    return arr


def write_matrix(path, a) -> None:
    a = np.asarray(a, dtype=float)
    write_text(path, json.dumps({"n": a.shape[0], "values": [float(v) for v in a.ravel()]}) + "\n")


def write_vector(path, v) -> None:
    write_text(path, json.dumps(np.asarray(v, dtype=float).tolist()) + "\n")


def write_text(path, text: str) -> None:
    """Write through a temporary file and rename, so failures leave no partial file."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
