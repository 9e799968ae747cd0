"""Test fixtures for focusdrt."""

import json
from pathlib import Path
from typing import Any

import pytest

from focusdrt.loader import BUNDLED_CORPUS, load_discourse, parse_input
from focusdrt.models import Discourse
from tests.hook_stub import RecordingHook


def np(kind: str, lemma: str = "", gender="masc", number="sg", animacy="unknown", **extra):
    """Build the JSON object of a noun phrase."""
    obj: dict[str, Any] = {"kind": kind}
    if lemma:
        obj["lemma"] = lemma
    if kind != "gap":
        obj.update({"gender": gender, "number": number, "animacy": animacy})
    obj.update(extra)
    return obj


def clause(clause_id: str, predicate: str, *args, mood: str = "indicative") -> dict[str, Any]:
    """Build the JSON object of a clause from (role, np) pairs."""
    return {
        "id": clause_id,
        "predicate": predicate,
        "mood": mood,
        "args": [{"role": role, "np": phrase} for role, phrase in args],
    }


def discourse_json(discourse_id: str, *mains: dict[str, Any]) -> str:
    """Serialize main clauses into an annotation file."""
    sentences = [{"index": i, "main": main} for i, main in enumerate(mains)]
    return json.dumps({"id": discourse_id, "sentences": sentences})


def make_discourse(discourse_id: str, *mains: dict[str, Any]) -> Discourse:
    return parse_input(discourse_json(discourse_id, *mains))


@pytest.fixture
def corpus_dir() -> Path:
    """The bundled example discourses."""
    return BUNDLED_CORPUS / "discourses"


@pytest.fixture
def load_example(corpus_dir):
    """Load a bundled example by file stem, e.g. `load_example("livro")`."""

    def load(name: str) -> Discourse:
        return load_discourse(corpus_dir / f"{name}.json")

    return load


@pytest.fixture
def recording_hook():
    """Provide a hook that accepts everything and remembers what it saw."""
    yield RecordingHook()


@pytest.fixture
def ler_discourse() -> Discourse:
    """'O João deu à Ana o livro. Ele leu-o.' (recency proposes the book first)."""
    return make_discourse(
        "ler",
        clause(
            "c0",
            "dar",
            ("AG", np("name", "João", animacy="animate")),
            ("GO", np("name", "Ana", gender="fem", animacy="animate")),
            ("TH", np("def", "livro", animacy="inanimate")),
        ),
        clause(
            "c1",
            "ler",
            ("AG", np("pron", "ele", animacy="animate")),
            ("TH", np("pron", "o")),
        ),
    )


@pytest.fixture
def gold_dir(tmp_path, corpus_dir):
    """A gold file over two bundled examples and one missing discourse."""
    gold = {
        "items": [
            {
                "discourse": str(corpus_dir / "livro.json"),
                "bindings": [{"occurrence": "1:c1:1", "antecedent": "0:c0:1"}],
            },
            {
                "discourse": "missing.json",
                "bindings": [{"occurrence": "0:c0:0", "antecedent": "x"}],
            },
            {
                "discourse": str(corpus_dir / "reflexive.json"),
                "bindings": [{"occurrence": "0:c0:1", "antecedent": "0:c0:0"}],
            },
        ]
    }
    (tmp_path / "gold.json").write_text(json.dumps(gold), encoding="utf-8")
    yield tmp_path
