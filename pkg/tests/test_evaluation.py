"""Tests for gold-corpus scoring."""

import json

import pytest

from focusdrt.constants import PHENOMENA
from focusdrt.errors import ParseError
from focusdrt.evaluation import (
    GoldCorpus,
    Tally,
    evaluate,
    load_gold,
    parse_gold,
)
from focusdrt.loader import BUNDLED_CORPUS
from focusdrt.models import NPPath
from focusdrt.resolver import RuleConfig


@pytest.fixture
def bundled_gold() -> GoldCorpus:
    return load_gold(BUNDLED_CORPUS / "gold.json")


def test_bundled_gold_is_fully_correct(bundled_gold):
    """Test that the default rules get every bundled gold binding right."""
    report = evaluate(bundled_gold)

    assert report.errored == ()
    assert report.overall == Tally(23, 23, 23)
    assert report.overall.accuracy == 1.0
    counts = {name: tally.total for name, tally in report.by_phenomenon.items()}
    assert counts == {"ellipsis": 4, "reflexive": 1, "recency": 2, "relative": 9, "focus": 7}
    assert report.failures == []


def test_disabling_recency(bundled_gold):
    """Test that without recency only 'Ela comprou-o' loses its antecedent."""
    report = evaluate(bundled_gold, RuleConfig(recency=False))

    assert report.overall == Tally(23, 23, 22)
    assert report.by_phenomenon["recency"].accuracy == 0.5
    ((item, score),) = report.failures
    assert item.discourse.name == "explicit_subject.json"
    assert score.occurrence == NPPath(1, "c1", 0)
    assert score.expected == ("z",)
    assert score.predicted == ("x",)


def test_empty_corpus():
    report = evaluate(GoldCorpus())
    assert report.overall == Tally()
    assert report.overall.accuracy == 0.0
    assert sorted(report.by_phenomenon) == sorted(PHENOMENA)


def test_missing_discourse_is_reported_not_scored(gold_dir):
    report = evaluate(load_gold(gold_dir / "gold.json"), workers=2)

    assert [item.index for item in report.items] == [0, 1, 2]
    (errored,) = report.errored
    assert errored.discourse.name == "missing.json"
    assert "Cannot read" in errored.error
    assert report.overall == Tally(2, 2, 2)
    assert "ERROR missing.json" in report.format_table()


def test_worker_count_does_not_change_the_report(bundled_gold):
    single = evaluate(bundled_gold, workers=1)
    pooled = evaluate(bundled_gold, workers=8)
    assert single.to_dict() == pooled.to_dict()
    assert [item.discourse for item in pooled.items] == [
        item.discourse for item in bundled_gold.items
    ]


def test_combination_gold_is_order_insensitive(corpus_dir, tmp_path):
    gold = {
        "items": [
            {
                "discourse": str(corpus_dir / "plural_subject.json"),
                "bindings": [{"occurrence": "1:c1:0", "antecedent": ["0:c0:2", "0:c0:0"]}],
            }
        ]
    }
    report = evaluate(parse_gold(json.dumps(gold), tmp_path))
    assert report.overall == Tally(1, 1, 1)
    assert report.by_phenomenon["ellipsis"].correct == 1


def test_explicit_phenomenon_wins(corpus_dir, tmp_path):
    gold = {
        "items": [
            {
                "discourse": str(corpus_dir / "livro.json"),
                "bindings": [
                    {"occurrence": "1:c1:1", "antecedent": "x", "phenomenon": "recency"}
                ],
            }
        ]
    }
    report = evaluate(parse_gold(json.dumps(gold), tmp_path))
    assert report.by_phenomenon["recency"] == Tally(1, 1, 0)
    assert "FAIL livro.json 1:c1:1: expected x, got y" in report.format_table()


def test_malformed_gold(tmp_path):
    data = json.dumps(
        {
            "items": [
                {"bindings": []},
                {"discourse": "a.json", "bindings": [{"occurrence": "1-c1-0", "antecedent": "x"}]},
                {"discourse": "b.json", "bindings": [{"occurrence": "0:c0:0", "antecedent": 3}]},
            ]
        }
    )
    with pytest.raises(ParseError) as error:
        parse_gold(data, tmp_path)
    assert error.value.problems == (
        "items[0].discourse: missing required field",
        "items[1].bindings[0].occurrence: expected a noun phrase path sentence:clause:arg",
        "items[2].bindings[0].antecedent: expected a referent, a path or a list of them",
    )


def test_gold_must_have_items(tmp_path):
    with pytest.raises(ParseError, match="not a gold file"):
        parse_gold("[]", tmp_path)


def test_tally_arithmetic():
    tally = Tally(4, 3, 2) + Tally(1, 1, 1)
    assert tally == Tally(5, 4, 3)
    assert tally.accuracy == 0.75
    assert tally.recall == 0.6
    assert tally.to_dict() == {
        "total": 5,
        "resolved": 4,
        "correct": 3,
        "accuracy": 0.75,
        "recall": 0.6,
    }


def test_report_counts_are_consistent(bundled_gold):
    """Test correct <= resolved <= total in every slice, under every rule setting."""
    for cfg in [RuleConfig(), RuleConfig(recency=False), RuleConfig(af_df_distinction=False)]:
        report = evaluate(bundled_gold, cfg, workers=2)
        for tally in [report.overall, *report.by_phenomenon.values()]:
            assert 0 <= tally.correct <= tally.resolved <= tally.total
        assert sum(t.total for t in report.by_phenomenon.values()) == report.overall.total


def test_json_report(bundled_gold):
    data = json.loads(evaluate(bundled_gold).to_json())
    assert data["total"] == 23
    assert data["accuracy"] == 1.0
    assert set(data["phenomena"]) == set(PHENOMENA)
    assert data["errored"] == [] and data["failures"] == []
