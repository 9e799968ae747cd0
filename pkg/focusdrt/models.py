"""Models for annotated discourses and the referents they introduce."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from .constants import CORE_ROLES, ROLE_RANKING


class Gender(Enum):
    """Grammatical gender; Portuguese nominals are masculine or feminine."""

    MASC = "masc"
    FEM = "fem"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


class Number(Enum):
    """Grammatical number."""

    SG = "sg"
    PL = "pl"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


class Animacy(Enum):
    """Animacy of the denoted entity."""

    ANIMATE = "animate"
    INANIMATE = "inanimate"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


class Role(Enum):
    """Thematic role of a clause argument.

    AG is the thematic agent as annotated, not the grammatical subject:
    copular subjects are TH, psych-verb subjects are AG.
    """

    AG = "AG"
    TH = "TH"
    GO = "GO"
    BEN = "BEN"
    INS = "INS"
    LOC = "LOC"
    OBL = "OBL"

    @property
    def rank(self) -> int:
        """Position in the focus ranking (lower ranks higher)."""
        return ROLE_RANKING.index(self.value)

    @property
    def is_core(self) -> bool:
        return self.value in CORE_ROLES

    def __str__(self) -> str:
        return self.value


class NPKind(Enum):
    """Kind of noun phrase; values are the codes used by the annotation format."""

    NAME = "name"
    INDEFINITE = "indef"
    DEFINITE = "def"
    PRONOUN = "pron"
    NULL_PRONOUN = "null"
    REFLEXIVE = "refl"
    GAP = "gap"

    @property
    def is_referential(self) -> bool:
        """True for kinds that introduce a new referent."""
        return self in (NPKind.NAME, NPKind.INDEFINITE, NPKind.DEFINITE)

    @property
    def is_anaphoric(self) -> bool:
        """True for kinds that need an antecedent."""
        return self in (NPKind.PRONOUN, NPKind.NULL_PRONOUN, NPKind.REFLEXIVE)

    def __str__(self) -> str:
        return self.value


class Mood(Enum):
    """Verbal mood; a subjunctive relative clause becomes a conditional."""

    INDICATIVE = "indicative"
    SUBJUNCTIVE = "subjunctive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Features:
    """Agreement features. Unknown values are explicit and match anything."""

    gender: Gender = Gender.UNKNOWN
    number: Number = Number.UNKNOWN
    animacy: Animacy = Animacy.UNKNOWN

    def gender_compatible(self, other: "Features") -> bool:
        if Gender.UNKNOWN in (self.gender, other.gender):
            return True
        return self.gender == other.gender

    def number_compatible(self, other: "Features") -> bool:
        if Number.UNKNOWN in (self.number, other.number):
            return True
        return self.number == other.number

    def __str__(self) -> str:
        return f"{self.gender}.{self.number}.{self.animacy}"


@dataclass(frozen=True)
class NounPhrase:
    """A noun phrase of an annotated clause."""

    kind: NPKind
    lemma: str = ""
    features: Features = field(default_factory=Features)
    relative: Optional["Clause"] = None
    rel_head_role: Optional[Role] = None
    ref: Optional[str] = None  # optional referent label, e.g. "j" for John


@dataclass(frozen=True)
class Argument:
    """A (role, noun phrase) pair of a clause."""

    role: Role
    np: NounPhrase


@dataclass(frozen=True)
class Clause:
    """A clause with its arguments in the parser's normalized order."""

    id: str
    predicate: str
    mood: Mood = Mood.INDICATIVE
    args: tuple[Argument, ...] = ()

    @property
    def agent(self) -> Optional[tuple[int, Argument]]:
        """The first AG argument with its ordinal, if any."""
        return next(((i, arg) for i, arg in enumerate(self.args) if arg.role is Role.AG), None)

    def relatives(self) -> Iterator[tuple[int, "Clause"]]:
        """Relative clauses attached to this clause's arguments."""
        for ordinal, arg in enumerate(self.args):
            if arg.np.relative is not None:
                yield ordinal, arg.np.relative


@dataclass(frozen=True)
class Sentence:
    """A sentence; relative clauses hang off its main clause's noun phrases."""

    index: int
    main: Clause


@dataclass(frozen=True)
class Discourse:
    """An annotated discourse: an ordered sequence of sentences."""

    id: str
    sentences: tuple[Sentence, ...] = ()


@dataclass(frozen=True, order=True)
class NPPath:
    """Address of a noun phrase: sentence index, clause id, argument ordinal."""

    sentence: int
    clause: str
    arg: int

    @classmethod
    def parse(cls, text: str) -> "NPPath":
        """Parse the `sentence:clause:arg` form used in traces and gold files."""
        parts = text.split(":")
        if len(parts) != 3 or not parts[1]:
            raise ValueError(f"Not a noun phrase path: {text!r}")
        try:
            return cls(int(parts[0]), parts[1], int(parts[2]))
        except ValueError as e:
            raise ValueError(f"Not a noun phrase path: {text!r}") from e

    def __str__(self) -> str:
        return f"{self.sentence}:{self.clause}:{self.arg}"


@dataclass(frozen=True)
class Referent:
    """A discourse entity.

    Referents are never deleted once introduced. Copies are the fresh referents
    of a conditional's consequent box that are equated to an antecedent-box
    referent; they are never proposed as antecedents. Groups are plural
    referents assembled for a combination antecedent.
    """

    id: str
    introduced_by: NPPath
    features: Features
    depth: int
    kind_of_origin: NPKind
    lemma: str = ""
    is_copy: bool = False
    members: tuple[str, ...] = ()
