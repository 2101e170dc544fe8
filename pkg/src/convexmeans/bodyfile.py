"""Reading and writing bodies as small JSON documents.

A body file holds ``dim``, an optional ``name`` and at least one of
``vertices`` (list of points) and ``halfspaces`` (list of ``{"a": [...], "b": x}``
meaning ``a . x <= b``).  Planar bodies may give either representation; the
other one is derived.  Bodies in dimension three or more need both.

Numbers are written with 17 significant digits so that doubles survive the
round trip, and the layout is fixed, so writing what was read reproduces the
file byte for byte.
"""

import json
import math

import numpy as np

from .bodies import HVBody, Polygon, support, validate
from .errors import InvalidBodyError
from .polygon_ops import halfspace_intersection_2d

__all__ = ["BodyFileError", "format_number", "body_to_dict", "body_from_dict",
           "dumps", "loads", "read_body", "write_body"]


class BodyFileError(InvalidBodyError):
    """Malformed or inconsistent body file."""


def format_number(x):
    x = float(x)
    if not math.isfinite(x):
        raise BodyFileError(f"cannot serialize non-finite number {x}")
    if x == 0.0:
        return "0"
    return format(x, ".17g")


def _vec(v):
    return "[" + ", ".join(format_number(c) for c in v) + "]"


def body_to_dict(body, name=None):
    """Plain-Python description of a body (lists of floats)."""
    out = {"dim": int(body.vertices.shape[1])}
    label = name if name is not None else getattr(body, "name", None)
    if label:
        out["name"] = str(label)
    out["vertices"] = [[float(c) for c in v] for v in body.vertices]
    out["halfspaces"] = [{"a": [float(c) for c in a], "b": float(b)}
                         for a, b in zip(body.normals, body.offsets)]
    return out


def dumps(body, name=None):
    d = body_to_dict(body, name)
    lines = ["{", f'  "dim": {d["dim"]},']
    if "name" in d:
        lines.append(f'  "name": {json.dumps(d["name"])},')
    lines.append('  "vertices": [')
    lines.append(",\n".join("    " + _vec(v) for v in d["vertices"]))
    lines.append("  ],")
    lines.append('  "halfspaces": [')
    lines.append(",\n".join(f'    {{"a": {_vec(h["a"])}, "b": {format_number(h["b"])}}}'
                            for h in d["halfspaces"]))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _matrix(rows, dim, what):
    try:
        arr = np.asarray(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise BodyFileError(f"{what}: not a numeric array") from exc
    if arr.ndim != 2 or arr.shape[1] != dim or len(arr) == 0:
        raise BodyFileError(f"{what}: expected a nonempty list of {dim}-vectors")
    if not np.all(np.isfinite(arr)):
        raise BodyFileError(f"{what}: non-finite entries")
    return arr


def body_from_dict(d):
    """Build a :class:`Polygon` (dim 2) or :class:`HVBody` from a parsed body file."""
    if not isinstance(d, dict):
        raise BodyFileError("body file must hold a JSON object")
    unknown = set(d) - {"dim", "name", "vertices", "halfspaces"}
    if unknown:
        raise BodyFileError(f"unknown keys: {sorted(unknown)}")
    dim = d.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 2:
        raise BodyFileError("dim must be an integer >= 2")
    name = d.get("name")
    if name is not None and not isinstance(name, str):
        raise BodyFileError("name must be a string")
    verts = d.get("vertices")
    halves = d.get("halfspaces")
    if verts is None and halves is None:
        raise BodyFileError("need vertices or halfspaces")
    V = _matrix(verts, dim, "vertices") if verts is not None else None
    if halves is not None:
        if not isinstance(halves, list) or not all(
                isinstance(h, dict) and set(h) == {"a", "b"} for h in halves):
            raise BodyFileError('halfspaces must be a list of {"a": [...], "b": number}')
        A = _matrix([h["a"] for h in halves], dim, "halfspace normals")
        b = _matrix([[h["b"]] for h in halves], 1, "halfspace offsets")[:, 0]
    if dim == 2:
        if V is not None:
            body = Polygon(V)
            if halves is not None:
                _check_consistent(body, A, b)
        else:
            if np.any(b <= 0):
                raise BodyFileError("all halfspace offsets must be positive")
            body = halfspace_intersection_2d((A, b))
        problems = validate(body)
        if problems:
            raise BodyFileError("; ".join(problems))
        return body
    if V is None or halves is None:
        raise BodyFileError("bodies with dim >= 3 need both vertices and halfspaces")
    body = HVBody(V, A, b, name=name)
    problems = validate(body)
    if problems:
        raise BodyFileError("; ".join(problems))
    return body


def _check_consistent(poly, A, b, tol=1e-9):
    scale = max(1.0, float(np.max(np.abs(poly.vertices))))
    lengths = np.linalg.norm(A, axis=1)
    # each listed halfspace must hold every vertex and touch the polygon
    dev = (support(poly, A) - b) / lengths
    if np.any(dev > tol * scale):
        raise BodyFileError("vertices violate the listed halfspaces")
    if np.any(dev < -tol * scale):
        raise BodyFileError("a listed halfspace does not support the vertex hull")
    # every edge normal must appear among the listed ones
    listed = np.sort(np.arctan2(A[:, 1], A[:, 0]))
    own = np.arctan2(poly.normals[:, 1], poly.normals[:, 0])
    ext = np.concatenate([listed - 2 * math.pi, listed, listed + 2 * math.pi])
    k = np.clip(np.searchsorted(ext, own), 1, len(ext) - 1)
    gap = np.minimum(np.abs(ext[k] - own), np.abs(ext[k - 1] - own))
    if np.any(gap > 1e-9):
        raise BodyFileError("an edge of the vertex hull is missing from the halfspaces")


def loads(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BodyFileError(f"not valid JSON: {exc}") from exc
    return body_from_dict(d), d.get("name") if isinstance(d, dict) else None


def read_body(path):
    """Return ``(body, name)`` from a body file."""
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write_body(path, body, name=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(body, name))
