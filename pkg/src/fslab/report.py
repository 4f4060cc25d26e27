"""Deterministic JSON and text rendering of reports."""

from __future__ import annotations

import json

import numpy as np

SCHEMA_VERSION = 1


def jsonable(obj):
    """Plain-JSON copy: tuples become lists, numpy scalars become Python numbers."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if hasattr(obj, "elements"):
        return list(obj.elements)
    return obj


def legend(M) -> dict:
    """Element id -> coordinate tuple, as strings keyed by id."""
    return {str(i): list(jsonable(lab)) for i, lab in enumerate(M.labels)}


def dumps(kind: str, payload: dict) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "kind": kind}
    doc.update(jsonable(payload))
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _lines(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                yield f"{pad}{k}:"
                yield from _lines(v, indent + 1)
            else:
                yield f"{pad}{k}: {_scalar(v)}"
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                yield f"{pad}-"
                yield from _lines(v, indent + 1)
            else:
                yield f"{pad}- {_scalar(v)}"


def _flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if isinstance(v, dict):
        return "{}"
    return str(v)


def dumps_text(kind: str, payload: dict) -> str:
    return "\n".join([f"# {kind}", *_lines(jsonable(payload))]) + "\n"


def render(kind: str, payload: dict, fmt: str = "json") -> str:
    return dumps(kind, payload) if fmt == "json" else dumps_text(kind, payload)
