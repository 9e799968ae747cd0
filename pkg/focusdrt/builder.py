"""DRS construction for annotated sentences."""

import logging
from dataclasses import dataclass, field
from itertools import count
from typing import Iterable, Iterator, Optional

from .constants import PLACEHOLDER_PREFIX, VARIABLE_NAMES
from .drs import ROOT, Atom, Condition, Drs, DrsLocation, Equality, Implication, Side
from .errors import ConstructionFault
from .models import (
    Animacy,
    Clause,
    Discourse,
    Features,
    Gender,
    Mood,
    NounPhrase,
    NPKind,
    NPPath,
    Number,
    Referent,
    Sentence,
)

logger = logging.getLogger(__name__)


def placeholder_for(path: NPPath) -> str:
    """The id an unresolved anaphor occupies in DRS conditions."""
    return f"{PLACEHOLDER_PREFIX}{path}"


class ReferentRegistry:
    """Mints referent ids and remembers every referent of the discourse."""

    def __init__(self, reserved: Iterable[str] = ()):
        self._referents: dict[str, Referent] = {}
        self._reserved = set(reserved)
        self._names = self._variable_names()

    @classmethod
    def for_discourse(cls, discourse: Discourse) -> "ReferentRegistry":
        """Create a registry that will not hand out any label used in `discourse`."""
        labels = []
        for sentence in discourse.sentences:
            labels.extend(_labels(sentence.main))
        return cls(labels)

    @staticmethod
    def _variable_names() -> Iterator[str]:
        yield from VARIABLE_NAMES
        for round_ in count(1):
            for name in VARIABLE_NAMES:
                yield f"{name}{round_}"

    def _fresh_id(self) -> str:
        for name in self._names:
            if name not in self._reserved and name not in self._referents:
                return name
        raise ConstructionFault("Ran out of referent names")  # unreachable

    def _add(self, referent: Referent) -> Referent:
        if referent.id in self._referents:
            raise ConstructionFault(f"Referent {referent.id} introduced twice")
        self._referents[referent.id] = referent
        logger.debug(f"Minted referent {referent.id} for {referent.introduced_by}")
        return referent

    def mint(self, path: NPPath, np: NounPhrase, depth: int) -> Referent:
        """Introduce the referent of a name, indefinite or definite noun phrase."""
        ref_id = np.ref if np.ref is not None else self._fresh_id()
        return self._add(Referent(ref_id, path, np.features, depth, np.kind, np.lemma))

    def mint_copy(self, path: NPPath, np: NounPhrase, depth: int) -> Referent:
        """Introduce a consequent-box copy for the noun phrase at `path`."""
        return self._add(
            Referent(self._fresh_id(), path, np.features, depth, np.kind, np.lemma, is_copy=True)
        )

    def mint_group(
        self, path: NPPath, members: tuple[str, ...], depth: int, kind: NPKind
    ) -> Referent:
        """Introduce a plural referent standing for a combination of `members`."""
        parts = [self.get(member).features for member in members]
        # A single masculine member makes the group masculine
        if any(p.gender is Gender.MASC for p in parts):
            gender = Gender.MASC
        elif all(p.gender is Gender.FEM for p in parts):
            gender = Gender.FEM
        else:
            gender = Gender.UNKNOWN
        if all(p.animacy is Animacy.ANIMATE for p in parts):
            animacy = Animacy.ANIMATE
        else:
            animacy = Animacy.UNKNOWN
        features = Features(gender, Number.PL, animacy)
        return self._add(
            Referent(self._fresh_id(), path, features, depth, kind, members=tuple(members))
        )

    def get(self, ref_id: str) -> Referent:
        try:
            return self._referents[ref_id]
        except KeyError:
            raise ConstructionFault(f"Unknown referent id {ref_id!r}") from None

    def __contains__(self, ref_id: object) -> bool:
        return ref_id in self._referents

    def __iter__(self) -> Iterator[Referent]:
        return iter(self._referents.values())

    def __len__(self) -> int:
        return len(self._referents)


def _labels(clause: Clause) -> Iterator[str]:
    for arg in clause.args:
        if arg.np.ref is not None:
            yield arg.np.ref
        if arg.np.relative is not None:
            yield from _labels(arg.np.relative)


@dataclass(frozen=True)
class Slot:
    """An anaphor awaiting resolution.

    `location` is relative to the sentence fragment. In a consequent box the
    anaphor gets a fresh `copy` referent equated to the placeholder.
    """

    path: NPPath
    location: DrsLocation
    placeholder: str
    copy: Optional[str] = None


@dataclass(frozen=True)
class SentenceDelta:
    """What one sentence adds to the discourse DRS."""

    fragment: Drs
    referents: tuple[Referent, ...] = ()
    np_referents: dict[NPPath, str] = field(default_factory=dict)
    slots: tuple[Slot, ...] = ()


class _Box:
    """Mutable box used while a sentence fragment is being assembled."""

    def __init__(self, location: DrsLocation):
        self.location = location
        self.universe: list[str] = []
        self.conditions: list[object] = []

    def add_implication(self) -> tuple["_Box", "_Box"]:
        ordinal = len(self.conditions)
        antecedent = _Box(self.location.child(ordinal, Side.ANTECEDENT))
        consequent = _Box(self.location.child(ordinal, Side.CONSEQUENT))
        self.conditions.append((antecedent, consequent))
        return antecedent, consequent

    def freeze(self) -> Drs:
        conditions: list[Condition] = []
        for condition in self.conditions:
            if isinstance(condition, tuple):
                antecedent, consequent = condition
                conditions.append(Implication(antecedent.freeze(), consequent.freeze()))
            else:
                conditions.append(condition)  # type: ignore[arg-type]
        return Drs(tuple(self.universe), tuple(conditions))


class _SentenceBuilder:
    def __init__(self, sentence: Sentence, registry: ReferentRegistry):
        self.sentence = sentence
        self.registry = registry
        self.top = _Box(ROOT)
        self.minted: list[Referent] = []
        self.np_referents: dict[NPPath, str] = {}
        self.slots: list[Slot] = []

    def build(self) -> SentenceDelta:
        self._build_clause(self.sentence.main, 0, self.top, None)
        return SentenceDelta(
            fragment=self.top.freeze(),
            referents=tuple(self.minted),
            np_referents=dict(self.np_referents),
            slots=tuple(self.slots),
        )

    def _mint(self, path: NPPath, np: NounPhrase, depth: int, box: _Box) -> str:
        referent = self.registry.mint(path, np, depth)
        self.minted.append(referent)
        # Proper names always live in the outermost box
        home = self.top if np.kind is NPKind.NAME else box
        home.universe.append(referent.id)
        home.conditions.append(Atom(np.lemma, (referent.id,)))
        self.np_referents[path] = referent.id
        return referent.id

    def _copy(self, path: NPPath, np: NounPhrase, depth: int, box: _Box) -> str:
        copy = self.registry.mint_copy(path, np, depth)
        self.minted.append(copy)
        box.universe.append(copy.id)
        return copy.id

    def _build_clause(self, clause: Clause, depth: int, box: _Box, head: Optional[str]) -> None:
        current = box
        slots: list[str] = []
        for ordinal, arg in enumerate(clause.args):
            path = NPPath(self.sentence.index, clause.id, ordinal)
            np = arg.np

            if np.kind is NPKind.GAP:
                if head is None:
                    raise ConstructionFault(f"Gap at {path} has no head referent")
                self.np_referents[path] = head
                slots.append(head)

            elif np.kind.is_anaphoric:
                placeholder = placeholder_for(path)
                if current is box:
                    slots.append(placeholder)
                    self.slots.append(Slot(path, current.location, placeholder))
                else:
                    copy = self._copy(path, np, depth, current)
                    current.conditions.append(Equality(copy, placeholder))
                    slots.append(copy)
                    self.slots.append(Slot(path, current.location, placeholder, copy))

            elif np.relative is not None and np.relative.mood is Mood.SUBJUNCTIVE:
                # The head and its relative form the antecedent; the rest of the
                # clause moves into the consequent through a fresh, equated referent.
                antecedent, consequent = current.add_implication()
                ref = self._mint(path, np, depth, antecedent)
                self._build_clause(np.relative, depth + 1, antecedent, ref)
                copy = self._copy(path, np, depth, consequent)
                consequent.conditions.append(Equality(copy, ref))
                slots.append(copy)
                current = consequent

            else:
                ref = self._mint(path, np, depth, current)
                if np.relative is not None:
                    self._build_clause(np.relative, depth + 1, current, ref)
                slots.append(ref)

        if slots:
            current.conditions.append(Atom(clause.predicate, tuple(slots)))


def build_sentence_drs(sentence: Sentence, registry: ReferentRegistry) -> SentenceDelta:
    """Build the DRS fragment a sentence contributes.

    Names, indefinites and definites mint referents; anaphors leave
    placeholders for the resolver. Indicative relative clauses are flat,
    subjunctive ones become an implication.
    """
    delta = _SentenceBuilder(sentence, registry).build()
    logger.debug(
        f"Sentence {sentence.index}: {len(delta.referents)} new referents, "
        f"{len(delta.slots)} anaphors to resolve"
    )
    return delta
