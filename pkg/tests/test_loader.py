"""Tests for reading and writing annotation files."""

import json

import pytest

from focusdrt.errors import ParseError
from focusdrt.loader import dump_discourse, load_discourse, parse_input
from focusdrt.models import Mood, NPKind, Role
from tests.conftest import clause, discourse_json, np


def test_minimal_discourse():
    discourse = parse_input(
        discourse_json("d1", clause("c0", "chover")),
    )
    assert discourse.id == "d1"
    assert len(discourse.sentences) == 1
    assert discourse.sentences[0].main.mood is Mood.INDICATIVE


def test_empty_discourse():
    discourse = parse_input('{"id": "empty", "sentences": []}')
    assert discourse.sentences == ()


def test_bundled_example(load_example):
    discourse = load_example("livro")
    (arg,) = [a for a in discourse.sentences[1].main.args if a.role is Role.TH]
    assert arg.np.kind is NPKind.PRONOUN
    assert arg.np.lemma == "o"
    assert discourse.sentences[0].main.args[0].np.lemma == "João"


def test_gap_copies_head_features(load_example):
    discourse = load_example("cliente")
    cliente = discourse.sentences[0].main.args[1].np
    gap = cliente.relative.args[0].np
    assert gap.kind is NPKind.GAP
    assert gap.features == cliente.features


def test_missing_field_is_reported_with_its_path():
    data = json.loads(discourse_json("d1", clause("c0", "chover")))
    del data["sentences"][0]["main"]["mood"]
    with pytest.raises(ParseError) as error:
        parse_input(json.dumps(data))
    assert error.value.problems == ("sentences[0].main.mood: missing required field",)


def test_every_schema_problem_is_reported():
    """Test that one pass collects unknown fields, bad enums and wrong types."""
    data = json.loads(
        discourse_json(
            "d1",
            clause("c0", "ver", ("AG", np("name", "Ana", gender="female")), ("XX", np("indef"))),
        )
    )
    data["sentences"][0]["main"]["tense"] = "past"
    data["sentences"][0]["main"]["predicate"] = 3
    with pytest.raises(ParseError) as error:
        parse_input(json.dumps(data), source="broken.json")

    problems = error.value.problems
    assert "sentences[0].main.tense: unknown field" in problems
    assert "sentences[0].main.predicate: expected a string, got int" in problems
    bad_gender = "sentences[0].main.args[0].np.gender: 'female' is not one of masc|fem|unknown"
    assert bad_gender in problems
    assert any(p.startswith("sentences[0].main.args[1].role: 'XX'") for p in problems)
    assert str(error.value).startswith("broken.json does not follow the annotation schema")


def test_malformed_json():
    with pytest.raises(ParseError) as error:
        parse_input('{"id": "d1",\n "sentences": [}')
    assert error.value.message == "<input> is not valid JSON"
    assert error.value.problems[0].startswith("line 2 column")


def test_invalid_utf8():
    with pytest.raises(ParseError, match="not valid UTF-8"):
        parse_input(b'{"id": "\xff"}')


def test_invariant_violations_are_parse_errors():
    text = discourse_json(
        "d1",
        clause(
            "c0",
            "ver",
            ("AG", np("name", "Ana", gender="fem")),
            ("AG", np("name", "Rui")),
        ),
    )
    with pytest.raises(ParseError) as error:
        parse_input(text)
    assert "breaks discourse invariants" in error.value.message
    assert error.value.problems == ("c0: clause has 2 AG arguments",)


def test_unreadable_file(tmp_path):
    with pytest.raises(ParseError, match="Cannot read"):
        load_discourse(tmp_path / "nowhere.json")


def test_rel_head_role_without_relative():
    text = discourse_json("d1", clause("c0", "ver", ("AG", np("name", "Ana", rel_head_role="AG"))))
    with pytest.raises(ParseError) as error:
        parse_input(text)
    assert error.value.problems == (
        "sentences[0].main.args[0].np.rel_head_role: given without a relative clause",
    )


def test_dump_is_canonical(corpus_dir):
    """Test that dumping a loaded example and parsing it back gives the same discourse."""
    for path in sorted(corpus_dir.glob("*.json")):
        discourse = load_discourse(path)
        text = dump_discourse(discourse)
        assert parse_input(text) == discourse
        assert text.endswith("}\n")
        assert list(json.loads(text)) == ["id", "sentences"]


def test_dump_keeps_non_ascii(load_example):
    text = dump_discourse(load_example("livro"))
    assert '"lemma": "João"' in text
    assert '"gender": "fem"' in text


def test_document_must_be_an_object():
    with pytest.raises(ParseError) as error:
        parse_input("[]")
    assert error.value.problems == ("discourse: expected an object, got list",)


def test_noun_phrases_need_features():
    text = discourse_json("d1", clause("c0", "ver", ("TH", {"kind": "def", "lemma": "livro"})))
    with pytest.raises(ParseError) as error:
        parse_input(text)
    where = "sentences[0].main.args[0].np"
    assert error.value.problems == (
        f"{where}.gender: missing required field",
        f"{where}.number: missing required field",
        f"{where}.animacy: missing required field",
    )


def test_gap_features_come_all_or_nothing():
    gap = {"kind": "gap", "gender": "masc"}
    relative = clause("c0r1", "ler", ("AG", np("name", "Rui")), ("TH", gap))
    text = discourse_json("d1", clause("c0", "ver", ("TH", np("def", "livro", relative=relative))))
    with pytest.raises(ParseError) as error:
        parse_input(text)
    where = "sentences[0].main.args[0].np.relative.args[1].np"
    assert set(error.value.problems) == {
        f"{where}.number: missing required field",
        f"{where}.animacy: missing required field",
    }


def test_gap_outside_relative_is_an_invariant_violation():
    text = discourse_json("d1", clause("c0", "ver", ("TH", np("gap"))))
    with pytest.raises(ParseError) as error:
        parse_input(text)
    assert "breaks discourse invariants" in error.value.message
    assert "c0: gap outside a relative clause" in error.value.problems
