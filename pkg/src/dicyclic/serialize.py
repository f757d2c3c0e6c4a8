"""JSON encoding of CLI documents.

A document is ``{"schema_version", "kind", "n", "entries": [...]}``.  Elements
are written as ``1``, ``x``, ``x^3``, ``y``, ``yx^4``.  Reading validates
against :data:`SCHEMA`, which rejects unknown fields.
"""

from __future__ import annotations

import json
from typing import Any

import jsonschema

from .automorphism import Automorphism, RsAutomorphism, TableAutomorphism
from .group import GroupTable, enumerate_group, parse_element
from .symmetric import SpaceReport

SCHEMA_VERSION = "1.0"

_element = {"type": "string", "pattern": r"^(1|y|y?x(\^[0-9]+)?)$"}
_element_list = {"type": "array", "items": _element}

_automorphism = {
    "type": "object",
    "additionalProperties": False,
    "required": ["kind", "r", "s", "images"],
    "properties": {
        "kind": {"enum": ["rs", "table"]},
        "r": {"type": ["integer", "null"]},
        "s": {"type": ["integer", "null"]},
        "images": {
            "type": "object",
            "additionalProperties": False,
            "required": ["x", "y"],
            "properties": {"x": _element, "y": _element},
        },
        "label": {"type": "string"},
    },
}

_entries = {
    "elements": {
        "type": "object",
        "additionalProperties": False,
        "required": ["element", "order", "center"],
        "properties": {
            "element": _element,
            "order": {"type": "integer"},
            "center": {"type": "boolean"},
        },
    },
    "multable": {
        "type": "object",
        "additionalProperties": False,
        "required": ["row", "products"],
        "properties": {"row": _element, "products": _element_list},
    },
    "autos": {
        "type": "object",
        "additionalProperties": False,
        "required": ["automorphism", "order", "inner", "involution", "class_representative"],
        "properties": {
            "automorphism": _automorphism,
            "order": {"type": "integer"},
            "inner": {"type": "boolean"},
            "involution": {"type": "boolean"},
            "class_representative": _automorphism,
        },
    },
    "spaces": {
        "type": "object",
        "additionalProperties": False,
        "required": [
            "automorphism", "order", "inner", "H", "Q", "R", "R_minus_Q",
            "h_orbits", "g_orbits", "provenance", "r_beyond_paper",
        ],
        "properties": {
            "automorphism": _automorphism,
            "order": {"type": "integer"},
            "inner": {"type": "boolean"},
            "H": _element_list,
            "Q": _element_list,
            "R": _element_list,
            "R_minus_Q": _element_list,
            "h_orbits": {"type": "array", "items": _element_list},
            "g_orbits": {"type": "array", "items": _element_list},
            "provenance": {"type": "object", "additionalProperties": {"type": "string"}},
            "r_beyond_paper": {"type": "boolean"},
        },
    },
}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": False,
    "required": ["schema_version", "kind", "n", "entries"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "kind": {"enum": sorted(_entries)},
        "n": {"type": "integer", "minimum": 2},
        "entries": {"type": "array"},
    },
    "allOf": [
        {
            "if": {"properties": {"kind": {"const": kind}}},
            "then": {"properties": {"entries": {"items": schema}}},
        }
        for kind, schema in _entries.items()
    ],
}


def names(elements) -> list[str]:
    return [str(g) for g in elements]


def document(kind: str, n: int, entries: list[dict]) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, "n": n, "entries": entries}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def loads(text: str) -> dict:
    doc = json.loads(text)
    jsonschema.validate(doc, SCHEMA)
    return doc


def automorphism_to_json(phi: Automorphism, label: str | None = None) -> dict:
    out: dict[str, Any]
    if isinstance(phi, RsAutomorphism):
        out = {"kind": "rs", "r": phi.r, "s": phi.s}
        x_img, y_img = phi(enumerate_group(phi.n)[1]), phi(enumerate_group(phi.n)[2 * phi.n])
    else:
        out = {"kind": "table", "r": None, "s": None}
        rs = phi.to_rs()
        if rs is not None:
            out["r"], out["s"] = rs.r, rs.s
        x_img, y_img = phi.x_image, phi.y_image
    out["images"] = {"x": str(x_img), "y": str(y_img)}
    if label is not None:
        out["label"] = label
    return out


def automorphism_from_json(data: dict, n: int) -> Automorphism:
    if data["kind"] == "rs":
        return RsAutomorphism(data["r"], data["s"], n)
    return TableAutomorphism.from_generators(
        parse_element(data["images"]["x"], n), parse_element(data["images"]["y"], n)
    )


def multable_entries(table: GroupTable) -> list[dict]:
    labels = [table.label(i) for i in range(table.order)]
    return [
        {"row": labels[i], "products": [labels[j] for j in table.product[i]]}
        for i in range(table.order)
    ]


def multable_from_entries(entries: list[dict]) -> GroupTable:
    labels = [e["row"] for e in entries]
    index = {label: i for i, label in enumerate(labels)}
    product = tuple(tuple(index[p] for p in e["products"]) for e in entries)
    ident = next(i for i, row in enumerate(product) if list(row) == list(range(len(labels))))
    return GroupTable(tuple(labels), product, ident)


def space_report_to_json(report: SpaceReport, label: str | None = None) -> dict:
    return {
        "automorphism": automorphism_to_json(report.phi, label),
        "order": report.order,
        "inner": report.inner,
        "H": names(report.H),
        "Q": names(report.Q),
        "R": names(report.R),
        "R_minus_Q": names(report.R_minus_Q),
        "h_orbits": [names(o) for o in report.h_orbits],
        "g_orbits": [names(o) for o in report.g_orbits],
        "provenance": dict(report.provenance),
        "r_beyond_paper": report.r_beyond_paper,
    }


def space_report_from_json(data: dict, n: int) -> SpaceReport:
    def elems(labels):
        return tuple(parse_element(s, n) for s in labels)

    return SpaceReport(
        phi=automorphism_from_json(data["automorphism"], n),
        order=data["order"],
        inner=data["inner"],
        H=elems(data["H"]),
        Q=elems(data["Q"]),
        R=elems(data["R"]),
        R_minus_Q=elems(data["R_minus_Q"]),
        h_orbits=[elems(o) for o in data["h_orbits"]],
        g_orbits=[elems(o) for o in data["g_orbits"]],
        provenance=dict(data["provenance"]),
    )
