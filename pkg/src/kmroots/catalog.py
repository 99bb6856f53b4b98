"""Catalog files: a JSON array of decomposition records.

Each record is an object::

    {"ambient": "<diagram text>", "sub_roots": [[...], ...],
     "group_index": 5, "lattice_index": 2, "star": "holds",
     "minimal": true, "provenance": "dim 3, class H4-1, 1 root lengths; no decomposed angle"}

The ambient diagram text must describe a Cartan matrix (see :mod:`kmroots.dsl`).
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .classify import STAR_VALUES, DecompositionRecord
from .dsl import parse_gcm, serialize
from .errors import DiagramParseError, InvalidCartanMatrix, SchemaError

FIELDS = ("ambient", "sub_roots", "group_index", "lattice_index", "star", "minimal", "provenance")


def _positive_int(value, path):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise SchemaError("expected a positive integer", path)
    return value


def record_from_json(obj, path: str = "$") -> DecompositionRecord:
    if not isinstance(obj, dict):
        raise SchemaError("expected an object", path)
    for key in FIELDS:
        if key not in obj:
            raise SchemaError("missing key", f"{path}.{key}")
    extra = sorted(set(obj) - set(FIELDS))
    if extra:
        raise SchemaError("unexpected key", f"{path}.{extra[0]}")
    if not isinstance(obj["ambient"], str):
        raise SchemaError("expected diagram text", f"{path}.ambient")
    try:
        ambient = parse_gcm(obj["ambient"])
    except (DiagramParseError, InvalidCartanMatrix) as exc:
        raise SchemaError(str(exc), f"{path}.ambient") from exc
    roots = obj["sub_roots"]
    if not isinstance(roots, list) or not roots:
        raise SchemaError("expected a non-empty array of integer arrays", f"{path}.sub_roots")
    for k, r in enumerate(roots):
        p = f"{path}.sub_roots[{k}]"
        if not isinstance(r, list) or len(r) != ambient.n_plus_1:
            raise SchemaError(f"expected an array of {ambient.n_plus_1} integers", p)
        for m, x in enumerate(r):
            if not isinstance(x, int) or isinstance(x, bool):
                raise SchemaError("expected an integer", f"{p}[{m}]")
    gi = _positive_int(obj["group_index"], f"{path}.group_index")
    li = _positive_int(obj["lattice_index"], f"{path}.lattice_index")
    if obj["star"] not in STAR_VALUES:
        raise SchemaError(f"expected one of {', '.join(STAR_VALUES)}", f"{path}.star")
    if not isinstance(obj["minimal"], bool):
        raise SchemaError("expected true or false", f"{path}.minimal")
    if not isinstance(obj["provenance"], str):
        raise SchemaError("expected a string", f"{path}.provenance")
    return DecompositionRecord(
        ambient=ambient,
        sub_roots=tuple(tuple(r) for r in roots),
        expected_group_index=gi,
        expected_lattice_index=li,
        star=obj["star"],
        minimal=obj["minimal"],
        provenance=obj["provenance"],
    )


def record_to_json(rec: DecompositionRecord) -> dict:
    return {
        "ambient": serialize(rec.ambient),
        "sub_roots": [list(r) for r in rec.sub_roots],
        "group_index": rec.expected_group_index,
        "lattice_index": rec.expected_lattice_index,
        "star": rec.star,
        "minimal": rec.minimal,
        "provenance": rec.provenance,
    }


def loads_catalog(text: str) -> list[DecompositionRecord]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})", "$") from exc
    if not isinstance(data, list):
        raise SchemaError("expected an array of records", "$")
    return [record_from_json(obj, f"$[{k}]") for k, obj in enumerate(data)]


def load_catalog(path) -> list[DecompositionRecord]:
    return loads_catalog(Path(path).read_text(encoding="utf-8"))


def dumps_catalog(records) -> str:
    """Canonical text: fixed key order, one root vector per line, trailing newline."""
    chunks = []
    for rec in records:
        obj = record_to_json(rec)
        lines = ["  {"]
        items = []
        for key in FIELDS:
            if key == "sub_roots":
                inner = ",\n".join("      " + json.dumps(r) for r in obj[key])
                items.append(f'    "sub_roots": [\n{inner}\n    ]')
            else:
                items.append(f"    {json.dumps(key)}: {json.dumps(obj[key])}")
        lines.append(",\n".join(items))
        lines.append("  }")
        chunks.append("\n".join(lines))
    if not chunks:
        return "[]\n"
    return "[\n" + ",\n".join(chunks) + "\n]\n"


def dump_catalog(records, path) -> None:
    Path(path).write_text(dumps_catalog(records), encoding="utf-8")


def bundled_catalog_path() -> Path:
    return Path(str(resources.files("kmroots") / "data" / "catalog.json"))


def load_bundled_catalog() -> list[DecompositionRecord]:
    return load_catalog(bundled_catalog_path())
