"""JSON schemas of the task documents accepted by the command-line tool."""

from __future__ import annotations

NAT = {"type": "integer", "minimum": 0}
INT = {"type": "integer"}

RATIONAL = {
    "type": "object",
    "properties": {"num": INT, "den": {"type": "integer", "minimum": 1}},
    "required": ["num", "den"],
    "additionalProperties": False,
}

BASE = {
    "type": "object",
    "properties": {"genus": NAT, "punctures": NAT},
    "required": ["genus", "punctures"],
    "additionalProperties": False,
}

COMPONENT = {
    "type": "object",
    "properties": {
        "p": NAT, "q": NAT, "rank": NAT, "degree": RATIONAL, "kernel_rank": NAT,
    },
    "required": ["p", "q", "rank", "degree", "kernel_rank"],
    "additionalProperties": False,
}

BUNDLE = {
    "type": "object",
    "properties": {
        "weight": NAT,
        "base": BASE,
        "self_dual": {"type": "boolean"},
        "components": {"type": "array", "items": COMPONENT},
    },
    "required": ["weight", "base", "components"],
    "additionalProperties": False,
}

TERM = {
    "type": "object",
    "properties": {
        "width": NAT, "twist": INT, "multiplicity": NAT,
        "unitary_rank": {"type": "integer", "minimum": 1},
    },
    "required": ["width"],
    "additionalProperties": False,
}

REP = {
    "type": "object",
    "properties": {"terms": {"type": "array", "items": TERM}},
    "required": ["terms"],
    "additionalProperties": False,
}


def _obj(props: dict, required=None) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(props) if required is None else required,
        "additionalProperties": False,
    }


PAYLOADS = {
    "audit": _obj({"bundle": BUNDLE}),
    "decompose": _obj({"weight": NAT, "hodge_numbers": {"type": "array", "items": NAT}}),
    "build": _obj(
        {"width": NAT, "weight": NAT, "base": BASE,
         "unitary_rank": {"type": "integer", "minimum": 1}},
        required=["width", "weight", "base"],
    ),
    "cg": _obj({"a": NAT, "b": NAT}),
    "tensorpower": _obj({"n": NAT}),
    "tracepoly": _obj({"n": NAT}),
    "borcea": _obj({"n": {"type": "integer", "minimum": 1}, "base": BASE},
                   required=["n"]),
    "kummer": _obj({"d": {"type": "integer", "minimum": 1},
                    "case": {"enum": ["i", "ii.a", "ii.b"]}}),
    "feasibility": _obj(
        {"weight": NAT, "base": BASE, "h_top": NAT,
         "strictly_maximal": {"type": "boolean"}, "calabi_yau": {"type": "boolean"}},
        required=["weight", "base"],
    ),
    "bidegree-check": _obj(
        {"rep": REP, "weight": NAT, "m": NAT, "m_prime": NAT},
    ),
}

COMMANDS = tuple(PAYLOADS)

TASK = {
    "type": "object",
    "properties": {
        "schema_version": {"const": 1},
        "command": {"enum": list(COMMANDS)},
        "payload": {"type": "object"},
    },
    "required": ["command", "payload"],
    "additionalProperties": False,
}
