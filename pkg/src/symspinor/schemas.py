"""JSON schemas for every document the package writes."""

HALF_INT = {"type": "string", "pattern": r"^-?\d+(/2)?$"}

WEIGHT = {
    "type": "object",
    "required": ["fundamental", "epsilon"],
    "properties": {
        "fundamental": {"type": "array", "items": HALF_INT, "minItems": 1},
        "epsilon": {"type": "array", "items": HALF_INT, "minItems": 1},
    },
    "additionalProperties": False,
}

CHARACTER = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["weight", "multiplicity"],
        "properties": {"weight": WEIGHT, "multiplicity": {"type": "integer"}},
        "additionalProperties": False,
    },
}

DECOMPOSITION = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["family", "fundamental_coords", "multiplicity"],
        "properties": {
            "family": {"enum": ["Finite", "Bounded"]},
            "fundamental_coords": {"type": "array", "items": HALF_INT},
            "multiplicity": {"type": "integer", "minimum": 1},
        },
        "additionalProperties": False,
    },
}

NODE = {
    "type": "object",
    "required": ["i", "j", "label"],
    "properties": {
        "i": {"type": "integer", "minimum": 0},
        "j": {"type": "integer", "minimum": 0},
        "label": {"type": "string"},
        "weight": WEIGHT,
    },
}

DIAGRAM = {
    "type": "object",
    "required": ["rank", "nodes", "edges"],
    "properties": {
        "rank": {"type": "integer", "minimum": 2},
        "nodes": {"type": "array", "items": NODE},
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["from", "to"],
                "properties": {
                    "from": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
                    "to": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
                    "name": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
    },
}

DECOMPOSITION_DOC = {
    "type": "object",
    "required": ["rank", "decomposition"],
    "properties": {"rank": {"type": "integer"}, "decomposition": DECOMPOSITION},
}

FORMS_DOC = {
    "type": "object",
    "required": ["rank", "degree", "decomposition", "xi"],
    "properties": {
        "rank": {"type": "integer"},
        "degree": {"type": "integer"},
        "decomposition": DECOMPOSITION,
        "xi": {"type": "array", "items": NODE},
    },
}

TABLE_DOC = {
    "type": "object",
    "required": ["rank", "labels"],
    "properties": {"rank": {"type": "integer"}, "labels": {"type": "array", "items": NODE}},
}

SUITE = {
    "type": "object",
    "required": ["name", "cases", "passed", "first_failure", "failures", "notes"],
    "properties": {
        "name": {"type": "string"},
        "cases": {"type": "integer", "minimum": 0},
        "passed": {"type": "boolean"},
        "first_failure": {"type": ["string", "null"]},
        "failures": {"type": "array", "items": {"type": "string"}},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}

VERIFY_DOC = {
    "type": "object",
    "required": ["rank", "depth", "passed", "suites"],
    "properties": {
        "rank": {"type": "integer"},
        "depth": {"type": "integer"},
        "passed": {"type": "boolean"},
        "suites": {"type": "array", "items": SUITE},
    },
}
