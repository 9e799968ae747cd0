"""Tests for the core model types and sentence traversal."""

import pytest

from focusdrt.models import Features, Gender, NPKind, NPPath, Number, Role
from focusdrt.utils import mentions
from tests.conftest import clause, make_discourse, np


def test_role_ranking():
    """Test that the theme ranks highest and the agent lowest."""
    ranked = sorted(Role, key=lambda role: role.rank)
    assert ranked[0] is Role.TH
    assert ranked[-1] is Role.AG
    assert [r.value for r in ranked] == ["TH", "GO", "BEN", "INS", "LOC", "OBL", "AG"]


def test_core_roles():
    assert {role for role in Role if role.is_core} == {Role.AG, Role.TH, Role.GO}


def test_unknown_features_match_anything():
    """Test that unknown gender and number are wildcards."""
    fem = Features(Gender.FEM, Number.SG)
    assert fem.gender_compatible(Features(Gender.UNKNOWN, Number.SG))
    assert not fem.gender_compatible(Features(Gender.MASC, Number.SG))
    assert fem.number_compatible(Features(Gender.FEM, Number.UNKNOWN))
    assert not fem.number_compatible(Features(Gender.FEM, Number.PL))


def test_np_kinds():
    assert NPKind.NAME.is_referential and not NPKind.NAME.is_anaphoric
    assert NPKind.NULL_PRONOUN.is_anaphoric
    assert not NPKind.GAP.is_referential and not NPKind.GAP.is_anaphoric


def test_np_path_parse():
    """Test parsing and printing of noun phrase paths."""
    path = NPPath.parse("2:c1r1:0")
    assert path == NPPath(2, "c1r1", 0)
    assert str(path) == "2:c1r1:0"


@pytest.mark.parametrize("text", ["", "1:c0", "a:c0:1", "1::0", "1:c0:x"])
def test_np_path_parse_rejects(text):
    with pytest.raises(ValueError):
        NPPath.parse(text)


def test_mentions_follow_surface_order(load_example):
    """Test that a relative clause's material follows its head."""
    sentence = load_example("aluno").sentences[0]
    found = mentions(sentence)

    assert [str(m.path) for m in found] == [
        "0:c0:0",
        "0:c0:1",
        "0:c0:2",
        "0:c0r1:0",
        "0:c0r1:1",
    ]
    assert [m.depth for m in found] == [0, 0, 0, 1, 1]
    assert found[4].frame.head == NPPath(0, "c0", 2)


def test_clause_lineage(load_example):
    """Test that enclosing frames are listed from the main clause inward."""
    sentence = load_example("cliente").sentences[0]
    innermost = [m for m in mentions(sentence) if m.path.clause == "c0r1r1"][0]
    assert [frame.clause.id for frame in innermost.frame.lineage()] == ["c0", "c0r1"]


def test_clause_agent():
    discourse = make_discourse(
        "agent",
        clause("c0", "ver", ("TH", np("indef", "livro")), ("AG", np("name", "Ana", "fem"))),
    )
    ordinal, arg = discourse.sentences[0].main.agent
    assert ordinal == 1
    assert arg.np.lemma == "Ana"
