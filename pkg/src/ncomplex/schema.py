"""JSON schema for the tensor interchange format."""

import jsonschema

from .errors import PreconditionError

TENSOR_SCHEMA = {
    "type": "object",
    "required": ["D", "degree", "terms"],
    "properties": {
        "format": {"const": 1},
        "D": {"type": "integer", "minimum": 1},
        "degree": {"type": "integer", "minimum": 0},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["indices", "exponents", "coeff"],
                "additionalProperties": False,
                "properties": {
                    "indices": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "exponents": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "coeff": {
                        "oneOf": [
                            {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"},
                            {"type": "integer"},
                        ]
                    },
                },
            },
        },
    },
}


def _where(err: jsonschema.ValidationError) -> str:
    path = "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path)
    return path.lstrip(".") or "<root>"


def validate_tensor(data) -> None:
    """Raise :class:`PreconditionError` naming the offending position."""
    validator = jsonschema.Draft202012Validator(TENSOR_SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        raise PreconditionError(f"invalid tensor JSON at {_where(e)}: {e.message}")
