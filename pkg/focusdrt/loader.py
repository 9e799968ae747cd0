"""Reading and writing the JSON annotation format."""

import json
import logging
from pathlib import Path
from typing import Any, Optional, Union

from .errors import ParseError
from .models import (
    Animacy,
    Argument,
    Clause,
    Discourse,
    Features,
    Gender,
    Mood,
    NounPhrase,
    NPKind,
    Number,
    Role,
    Sentence,
)
from .schema import schema_problems
from .validation import validate_discourse

logger = logging.getLogger(__name__)

BUNDLED_CORPUS = Path(__file__).parent / "corpus"


def _noun_phrase(obj: dict[str, Any], head: Optional[Features]) -> NounPhrase:
    if "gender" in obj:
        features = Features(Gender(obj["gender"]), Number(obj["number"]), Animacy(obj["animacy"]))
    else:
        # Only gaps may leave features out; they share their head's
        features = head or Features()
    relative = _clause(obj["relative"], features) if "relative" in obj else None
    rel_head_role = Role(obj["rel_head_role"]) if "rel_head_role" in obj else None
    return NounPhrase(
        NPKind(obj["kind"]), obj.get("lemma", ""), features, relative, rel_head_role, obj.get("ref")
    )


def _clause(obj: dict[str, Any], head: Optional[Features]) -> Clause:
    args = tuple(Argument(Role(arg["role"]), _noun_phrase(arg["np"], head)) for arg in obj["args"])
    return Clause(obj["id"], obj["predicate"], Mood(obj["mood"]), args)


def discourse_from_dict(obj: dict[str, Any]) -> Discourse:
    """Build a discourse from JSON that already follows the annotation schema."""
    sentences = tuple(
        Sentence(item.get("index", ordinal), _clause(item["main"], None))
        for ordinal, item in enumerate(obj["sentences"])
    )
    return Discourse(obj["id"], sentences)


def parse_input(data: Union[bytes, str], source: str = "<input>") -> Discourse:
    """Parse an annotated discourse from UTF-8 JSON.

    Args:
        data: File contents, as bytes or already decoded
        source: Name used in error messages

    Returns:
        The discourse, checked against the annotation schema and its invariants

    Raises:
        ParseError: listing every JSON, schema and invariant problem found
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"{source} is not valid UTF-8", [str(e)]) from e
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"{source} is not valid JSON", [f"line {e.lineno} column {e.colno}: {e.msg}"]
        ) from e

    problems = schema_problems("discourse", raw, root="discourse")
    if problems:
        raise ParseError(f"{source} does not follow the annotation schema", problems)
    discourse = discourse_from_dict(raw)

    violations = validate_discourse(discourse)
    if violations:
        raise ParseError(f"{source} breaks discourse invariants", [str(v) for v in violations])

    logger.info(f"Loaded discourse {discourse.id} with {len(discourse.sentences)} sentences")
    return discourse


def load_discourse(path: Path) -> Discourse:
    """Read and parse an annotation file."""
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise ParseError(f"Cannot read {path}", [str(e)]) from e
    return parse_input(data, source=str(path))


def _np_to_dict(np: NounPhrase) -> dict[str, Any]:
    obj: dict[str, Any] = {"kind": np.kind.value}
    if np.lemma:
        obj["lemma"] = np.lemma
    obj["gender"] = np.features.gender.value
    obj["number"] = np.features.number.value
    obj["animacy"] = np.features.animacy.value
    if np.relative is not None:
        obj["relative"] = _clause_to_dict(np.relative)
    if np.rel_head_role is not None:
        obj["rel_head_role"] = np.rel_head_role.value
    if np.ref is not None:
        obj["ref"] = np.ref
    return obj


def _clause_to_dict(clause: Clause) -> dict[str, Any]:
    return {
        "id": clause.id,
        "predicate": clause.predicate,
        "mood": clause.mood.value,
        "args": [{"role": arg.role.value, "np": _np_to_dict(arg.np)} for arg in clause.args],
    }


def discourse_to_dict(discourse: Discourse) -> dict[str, Any]:
    return {
        "id": discourse.id,
        "sentences": [
            {"index": s.index, "main": _clause_to_dict(s.main)} for s in discourse.sentences
        ],
    }


def dump_discourse(discourse: Discourse) -> str:
    """Serialize `discourse` as canonical annotation JSON (schema key order)."""
    return json.dumps(discourse_to_dict(discourse), ensure_ascii=False, indent=2) + "\n"
