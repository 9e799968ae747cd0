"""Tests for DRS rendering, traces and binding listings."""

import json

import pytest

from focusdrt.drs import Drs
from focusdrt.render import format_bindings, render_drs, trace_to_jsonl
from focusdrt.resolver import resolve_discourse
from tests.conftest import clause, make_discourse, np

JONES_BOX = """\
+-------------+
| x y z       |
|-------------|
| Jones(x)    |
| book(y)     |
| Smith(z)    |
| adores(z,y) |
| owns(x,y)   |
+-------------+
"""


def test_ascii_box(load_example):
    drs = resolve_discourse(load_example("jones")).drs
    assert render_drs(drs) == JONES_BOX


def test_empty_box():
    assert render_drs(Drs()) == "+--+\n|  |\n|--|\n+--+\n"


def test_ascii_conditional(load_example):
    """Test that both boxes of the donkey sentence sit side by side with the arrow."""
    lines = render_drs(resolve_discourse(load_example("donkey")).drs).splitlines()

    assert len({len(line) for line in lines}) == 1
    (arrow_row,) = [line for line in lines if "=>" in line]
    assert "farmer(x)" in arrow_row and "z = x" in arrow_row
    assert any("w = y" in line and "donkey(y)" in line for line in lines)
    assert "beats(z,w)" in "".join(lines)


def test_json_render(load_example):
    drs = resolve_discourse(load_example("donkey")).drs
    data = json.loads(render_drs(drs, "json"))

    assert data["universe"] == []
    (implication,) = data["conditions"]
    assert implication["type"] == "implication"
    assert implication["antecedent"]["universe"] == ["x", "y"]
    assert implication["consequent"]["conditions"][0] == {
        "type": "equality",
        "left": "z",
        "right": "x",
    }
    assert implication["consequent"]["conditions"][-1] == {
        "type": "atom",
        "predicate": "beats",
        "args": ["z", "w"],
    }
    assert render_drs(drs, "structured") == render_drs(drs, "json")


def test_unknown_mode():
    with pytest.raises(ValueError, match="Unknown render mode"):
        render_drs(Drs(), "latex")


def test_trace_lines(load_example):
    """Test one JSON object per sentence with the stores and that sentence's bindings."""
    text = trace_to_jsonl(resolve_discourse(load_example("livro")))
    first, second = [json.loads(line) for line in text.splitlines()]

    assert first == {
        "index": 0,
        "af": "x",
        "pafl": [],
        "afs": [],
        "df": "y",
        "pdfl": ["x"],
        "dfs": [],
        "bindings": [],
    }
    assert second["af"] == "z"
    assert second["afs"] == ["x"]
    assert second["bindings"] == [
        {
            "occurrence": "1:c1:1",
            "antecedent": "y",
            "rule": "explicit-nonagent:df",
            "rank_tried": 1,
        }
    ]


def test_trace_combination_antecedent(load_example):
    text = trace_to_jsonl(resolve_discourse(load_example("plural_subject")))
    last = json.loads(text.splitlines()[-1])
    assert last["bindings"][0]["antecedent"] == ["x", "z"]


def test_binding_listing(load_example):
    listing = format_bindings(resolve_discourse(load_example("chest")))
    assert listing.splitlines() == [
        "1:c1:0 -> c [explicit-nonagent:df, 1]",
        "2:c2:0 -> j [explicit-agent:af, 2]",
        "2:c2:1 -> P [explicit-nonagent:pdfl, 2]",
    ]


def test_unresolved_listing():
    discourse = make_discourse("lonely", clause("c0", "fugir", ("AG", np("pron", "ele"))))
    text = trace_to_jsonl(resolve_discourse(discourse))

    assert format_bindings(resolve_discourse(discourse)) == (
        "0:c0:0 -> unresolved [explicit-agent, 0]\n"
    )
    assert json.loads(text)["bindings"][0]["antecedent"] is None
