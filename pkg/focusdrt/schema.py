"""JSON schemas of the annotation and gold formats."""

import json
import logging
from functools import cache
from pathlib import Path
from typing import Any, Iterable

from jsonschema import Draft202012Validator
from jsonschema.exceptions import ValidationError

logger = logging.getLogger(__name__)

SCHEMA_DIR = Path(__file__).parent / "schemas"

_TYPE_NAMES = {
    "object": "an object",
    "array": "a list",
    "string": "a string",
    "integer": "an integer",
}


@cache
def validator(name: str) -> Draft202012Validator:
    """Load and check the schema `name` from the bundled schema directory."""
    schema = json.loads((SCHEMA_DIR / f"{name}.json").read_text(encoding="utf-8"))
    Draft202012Validator.check_schema(schema)
    logger.debug(f"Loaded schema {name}")
    return Draft202012Validator(schema)


def format_path(parts: Iterable[Any]) -> str:
    """Render a JSON location as `sentences[0].main.args[1]`."""
    text = ""
    for part in parts:
        if isinstance(part, int):
            text += f"[{part}]"
        else:
            text += f".{part}" if text else str(part)
    return text


def _field(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def _describe(error: ValidationError, root: str) -> list[str]:
    path = format_path(error.absolute_path)
    where = path or root
    instance = error.instance
    keyword = error.validator

    if keyword == "required":
        return [
            f"{_field(path, key)}: missing required field"
            for key in error.validator_value
            if key not in instance
        ]
    if keyword == "additionalProperties":
        known = error.schema.get("properties", {})
        return [f"{_field(path, key)}: unknown field" for key in instance if key not in known]
    if keyword == "dependentRequired":
        found = []
        for key, needs in error.validator_value.items():
            if key not in instance:
                continue
            for need in needs:
                if need in instance:
                    continue
                if need == "relative":
                    found.append(f"{_field(path, key)}: given without a relative clause")
                else:
                    found.append(f"{_field(path, need)}: missing required field")
        return found
    if keyword == "type":
        expected = _TYPE_NAMES.get(error.validator_value, error.validator_value)
        return [f"{where}: expected {expected}, got {type(instance).__name__}"]
    if keyword == "enum":
        return [f"{where}: {instance!r} is not one of {'|'.join(error.validator_value)}"]

    description = error.schema.get("description") if isinstance(error.schema, dict) else None
    if description:
        return [f"{where}: expected {description}"]
    return [f"{where}: {error.message}"]


def schema_problems(name: str, instance: Any, root: str) -> list[str]:
    """Every way `instance` breaks the schema `name`, one line per problem.

    Args:
        name: Schema file stem under `SCHEMA_DIR` (`discourse` or `gold`)
        instance: Decoded JSON value
        root: Label used for problems located at the top of the document

    Returns:
        Problems without duplicates, each prefixed with the offending path
    """
    errors = validator(name).iter_errors(instance)
    return list(dict.fromkeys(line for error in errors for line in _describe(error, root)))
