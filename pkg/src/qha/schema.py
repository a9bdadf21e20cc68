"""JSON Schemas (draft 2020-12) for the ``--json`` output of each command."""

from __future__ import annotations

_INT = {"type": "integer", "minimum": 0}

REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "HH report",
    "type": "object",
    "additionalProperties": False,
    "required": ["field", "dim_algebra", "f2_count", "f3_count", "hom_dims", "rank_d1",
                 "rank_d2", "dim_ker_d3", "hh", "hh2_basis"],
    "properties": {
        "field": {"type": "string", "pattern": "^(Q|F[0-9]+)$"},
        "dim_algebra": _INT,
        "f2_count": _INT,
        "f3_count": _INT,
        "hom_dims": {
            "type": "object", "additionalProperties": False,
            "required": ["q0", "q1", "q2", "q3"],
            "properties": {k: _INT for k in ("q0", "q1", "q2", "q3")},
        },
        "rank_d1": _INT,
        "rank_d2": _INT,
        "dim_ker_d3": _INT,
        "hh": {
            "type": "object", "additionalProperties": False,
            "required": ["hh0", "hh1", "hh2"],
            "properties": {k: _INT for k in ("hh0", "hh1", "hh2")},
        },
        "hh2_basis": {
            "type": "array",
            "items": {"type": "object", "additionalProperties": {"type": "string"}},
        },
    },
}

DIMS = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "per-vertex dimensions",
    "type": "object",
    "additionalProperties": False,
    "required": ["per_vertex", "total"],
    "properties": {
        "per_vertex": {"type": "object", "additionalProperties": _INT},
        "total": _INT,
    },
}

DEFORM = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "deformation comparison",
    "type": "object",
    "additionalProperties": False,
    "required": ["undeformed", "deformed", "equal", "t"],
    "properties": {
        "undeformed": {k: v for k, v in DIMS.items() if k != "$schema"},
        "deformed": {k: v for k, v in DIMS.items() if k != "$schema"},
        "equal": {"type": "boolean"},
        "t": {"type": "string"},
    },
}

_TRIPLE = {"type": "array", "items": _INT, "minItems": 3, "maxItems": 3}

ORACLE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "oracle comparison",
    "type": "object",
    "additionalProperties": False,
    "required": ["dim_algebra", "pipeline", "oracle", "match"],
    "properties": {
        "dim_algebra": _INT,
        "pipeline": _TRIPLE,
        "oracle": _TRIPLE,
        "match": {"type": "boolean"},
    },
}

BY_COMMAND = {"compute": REPORT, "family": REPORT, "dims": DIMS, "deform": DEFORM, "oracle": ORACLE}
