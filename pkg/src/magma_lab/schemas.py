"""JSON Schemas for the --json output of every CLI command."""

_ROWS = {
    "type": "array",
    "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
}

_CHECK_ITEM = {
    "type": "object",
    "properties": {
        "law": {"type": "string"},
        "order": {"type": "integer", "minimum": 1},
        "holds": {"type": "boolean"},
        "witness": {"type": ["object", "null"]},
        "detail": {"type": ["object", "null"]},
    },
    "required": ["law", "order", "holds"],
    "additionalProperties": False,
}

CHECK = {"type": "array", "items": _CHECK_ITEM}

CLASSIFY = {
    "type": "object",
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "labels": {"type": "array", "items": {"type": "string"}},
        "neutrals": {
            "type": "object",
            "properties": {
                "left": {"type": "array", "items": {"type": "integer"}},
                "right": {"type": "array", "items": {"type": "integer"}},
                "two_sided": {"type": ["integer", "null"]},
            },
            "required": ["left", "right", "two_sided"],
            "additionalProperties": False,
        },
        "inverses": {
            "type": ["array", "null"],
            "items": {"type": ["integer", "null"]},
        },
    },
    "required": ["order", "labels", "neutrals", "inverses"],
    "additionalProperties": False,
}

CANON = {
    "type": "object",
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "rows": _ROWS,
    },
    "required": ["order", "rows"],
    "additionalProperties": False,
}

ENUMERATE = {
    "type": "object",
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "mode": {"enum": ["all-magmas", "latin-squares"]},
        "count": {"type": "integer", "minimum": 0},
        "tables": {"type": "array", "items": _ROWS},
        "emitted": {"type": ["string", "null"]},
    },
    "required": ["order", "mode", "count"],
    "additionalProperties": False,
}

COUNT = {
    "type": "object",
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "mode": {"enum": ["all-magmas", "latin-squares"]},
        "count": {"type": "integer", "minimum": 0},
    },
    "required": ["order", "mode", "count"],
    "additionalProperties": False,
}

SEARCH = {
    "type": "object",
    "properties": {
        "assume": {"type": "array", "items": {"type": "string"}},
        "refute": {"type": "string"},
        "orders": {
            "type": "array",
            "items": {"type": "integer", "minimum": 1},
            "minItems": 2,
            "maxItems": 2,
        },
        "found": {"anyOf": [_ROWS, {"type": "null"}]},
        "order": {"type": ["integer", "null"]},
        "examined": {"type": "integer", "minimum": 0},
    },
    "required": ["assume", "refute", "orders", "found", "order", "examined"],
    "additionalProperties": False,
}

THEOREMS = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "id": {"type": "string"},
            "kind": {"enum": ["implication", "equivalence"]},
            "domain": {"enum": ["all-magmas", "quasigroups"]},
            "statement": {"type": "string"},
            "max_order": {"type": "integer", "minimum": 1},
            "examined": {"type": "integer", "minimum": 0},
            "verified": {"type": "boolean"},
            "branch": {"type": ["string", "null"]},
            "counterexample": {"anyOf": [_ROWS, {"type": "null"}]},
            "elapsed": {"type": "number"},
        },
        "required": [
            "id", "kind", "domain", "statement", "max_order",
            "examined", "verified", "branch", "counterexample",
        ],
        "additionalProperties": False,
    },
}

EXAMPLES = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "example": {"type": "integer", "minimum": 1},
            "structure": {"type": "string"},
            "kind": {"enum": ["finite", "windowed"]},
            "claims": {"type": "object", "additionalProperties": {"type": "boolean"}},
            "actual": {"type": "object", "additionalProperties": {"type": "boolean"}},
            "scopes": {"type": "object", "additionalProperties": {"type": "string"}},
            "mismatches": {"type": "array", "items": {"type": "string"}},
            "notes": {"type": "array", "items": {"type": "string"}},
        },
        "required": [
            "example", "structure", "kind", "claims", "actual",
            "scopes", "mismatches", "notes",
        ],
        "additionalProperties": False,
    },
}

SCHEMAS = {
    "check": CHECK,
    "classify": CLASSIFY,
    "canon": CANON,
    "enumerate": ENUMERATE,
    "count": COUNT,
    "search": SEARCH,
    "theorems": THEOREMS,
    "examples": EXAMPLES,
}
