"""Invariant checks over annotated discourses."""

import logging
from dataclasses import dataclass

from .models import Discourse, NounPhrase, NPKind, Role
from .utils import ClauseFrame, iter_frames

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    """A broken invariant, located by clause id or noun phrase path."""

    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


def validate_discourse(discourse: Discourse) -> list[Violation]:
    """Return every invariant violation of `discourse` (empty when valid).

    The discourse is not modified and violations are reported as data.
    """
    violations: list[Violation] = []
    clause_ids: set[str] = set()
    labels: set[str] = set()

    for ordinal, sentence in enumerate(discourse.sentences):
        if sentence.index != ordinal:
            violations.append(
                Violation(f"sentences[{ordinal}]", f"index {sentence.index} != position {ordinal}")
            )
        for frame in iter_frames(sentence):
            violations.extend(_check_clause(frame, sentence.index, clause_ids, labels))

    logger.debug(f"Validated discourse {discourse.id}: {len(violations)} violation(s)")
    return violations


def _check_clause(
    frame: ClauseFrame, sentence_index: int, clause_ids: set[str], labels: set[str]
) -> list[Violation]:
    clause = frame.clause
    found: list[Violation] = []

    if clause.id in clause_ids:
        found.append(Violation(clause.id, "clause id is not unique"))
    clause_ids.add(clause.id)
    if ":" in clause.id or not clause.id:
        found.append(Violation(clause.id or f"sentence {sentence_index}", "invalid clause id"))

    agents = [arg for arg in clause.args if arg.role is Role.AG]
    if len(agents) > 1:
        found.append(Violation(clause.id, f"clause has {len(agents)} AG arguments"))

    gaps = [arg for arg in clause.args if arg.np.kind is NPKind.GAP]
    if frame.depth == 0 and gaps:
        found.append(Violation(clause.id, "gap outside a relative clause"))
    if frame.depth > 0 and len(gaps) != 1:
        found.append(Violation(clause.id, f"relative clause has {len(gaps)} gaps, expected 1"))

    for ordinal, arg in enumerate(clause.args):
        np = arg.np
        where = f"{sentence_index}:{clause.id}:{ordinal}"
        if np.relative is not None and not np.kind.is_referential:
            found.append(Violation(where, f"{np.kind} noun phrase cannot head a relative clause"))
        if np.kind is NPKind.REFLEXIVE and arg.role is Role.AG:
            found.append(Violation(where, "reflexive in AG position"))
        if np.kind.is_referential and not np.lemma:
            found.append(Violation(where, f"{np.kind} noun phrase without lemma"))
        if np.kind in (NPKind.NULL_PRONOUN, NPKind.REFLEXIVE, NPKind.GAP) and np.lemma:
            found.append(Violation(where, f"{np.kind} noun phrase must have an empty lemma"))
        if np.ref is not None:
            if not np.kind.is_referential:
                found.append(Violation(where, f"{np.kind} noun phrase cannot carry a label"))
            elif np.ref in labels:
                found.append(Violation(where, f"referent label {np.ref!r} is not unique"))
            labels.add(np.ref)
        if np.relative is not None:
            found.extend(_check_head(np, where))

    return found


def _check_head(head: NounPhrase, where: str) -> list[Violation]:
    """Check the gap of the relative clause `head` carries."""
    relative = head.relative
    gap = None
    if relative is not None:
        gap = next((arg for arg in relative.args if arg.np.kind is NPKind.GAP), None)
    if gap is None:
        return []  # reported by the relative clause's own check
    found = []
    if head.rel_head_role is not None and gap.role is not head.rel_head_role:
        found.append(
            Violation(where, f"rel_head_role {head.rel_head_role} but the gap is {gap.role}")
        )
    if gap.np.features != head.features:
        found.append(Violation(where, "gap features differ from the head's"))
    return found
