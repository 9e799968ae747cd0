"""Focus stores: actor focus and discourse focus tracks across sentences."""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .models import Animacy, NPPath, Role

logger = logging.getLogger(__name__)


class IscMarker:
    """Slot in a candidate ordering where intrasentential candidates go."""

    _instance: Optional["IscMarker"] = None

    def __new__(cls) -> "IscMarker":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "<ISC>"


ISC = IscMarker()

OrderItem = Union[str, IscMarker]


@dataclass(frozen=True)
class FocusState:
    """The six focus stores after a sentence. Stacks keep their top last."""

    af: Optional[str] = None
    pafl: tuple[str, ...] = ()
    afs: tuple[str, ...] = ()
    df: Optional[str] = None
    pdfl: tuple[str, ...] = ()
    dfs: tuple[str, ...] = ()


@dataclass(frozen=True)
class Entry:
    """A main-clause referent as seen by the focus engine.

    For anaphors, `referent` is the resolved referent and `covers` the
    antecedent set it stands for (several ids for a combination).
    """

    referent: str
    role: Role
    animacy: Animacy = Animacy.UNKNOWN
    anaphoric: bool = False
    covers: tuple[str, ...] = ()


@dataclass(frozen=True)
class SentenceAnalysis:
    """The parts of a resolved sentence the focus engine works from.

    Relative-clause material is kept apart: pronouns in relative clauses do
    not move the focus, and relative referents only serve later sentences.
    """

    index: int
    main: tuple[Entry, ...] = ()
    relative: tuple[tuple[str, ...], ...] = ()  # referents grouped by depth 1, 2, ...
    relative_pronouns: tuple[tuple[NPPath, str], ...] = ()
    theme: Optional[str] = None
    relative_clauses: int = 0

    @property
    def pronouns(self) -> tuple[Entry, ...]:
        return tuple(entry for entry in self.main if entry.anaphoric)

    @property
    def agent(self) -> Optional[Entry]:
        return next((entry for entry in self.main if entry.role is Role.AG), None)

    @property
    def has_relatives(self) -> bool:
        return self.relative_clauses > 0

    @property
    def last_referent(self) -> Optional[str]:
        """Referent of the sentence's last main-clause constituent."""
        return self.main[-1].referent if self.main else None

    def relative_referents(self) -> list[str]:
        """Relative-clause referents, shallower clauses first."""
        return [ref for group in self.relative for ref in group]


def _unique(items: Iterable[str], exclude: Iterable[Optional[str]] = ()) -> tuple[str, ...]:
    skip = set(exclude)
    seen: list[str] = []
    for item in items:
        if item not in skip and item not in seen:
            seen.append(item)
    return tuple(seen)


def _push(stack: tuple[str, ...], item: Optional[str], current: Optional[str]) -> tuple[str, ...]:
    """Push `item` (moving it to the top if stacked) and drop the current focus."""
    if item is not None:
        stack = tuple(x for x in stack if x != item) + (item,)
    return tuple(x for x in stack if x != current)


def _highest_ranking(entries: Iterable[Entry]) -> Optional[Entry]:
    ranked = sorted(enumerate(entries), key=lambda pair: (pair[1].role.rank, pair[0]))
    return ranked[0][1] if ranked else None


def _animate_others(a: SentenceAnalysis, af: Optional[str]) -> tuple[str, ...]:
    return _unique(
        (entry.referent for entry in a.main if entry.animacy is Animacy.ANIMATE), exclude=[af]
    )


def init_focus(a: SentenceAnalysis) -> FocusState:
    """Set up the focus stores from a discourse-initial sentence."""
    agent = a.agent
    af = agent.referent if agent else None
    if a.theme is not None:
        df: Optional[str] = a.theme
    else:
        non_agent = next((entry for entry in a.main if entry.role is not Role.AG), None)
        df = non_agent.referent if non_agent else af
    state = FocusState(
        af=af,
        pafl=_animate_others(a, af),
        df=df,
        pdfl=_unique((entry.referent for entry in a.main), exclude=[df]),
    )
    logger.debug(f"Initial focus after sentence {a.index}: {state}")
    return state


def update_focus(prev: FocusState, a: SentenceAnalysis) -> FocusState:
    """Move the focus stores past a resolved sentence.

    AF follows the sentence's agent and persists when there is none. DF stays
    put when a main-clause pronoun refers to it, otherwise it moves to the
    highest-ranking main-clause pronoun, or failing that to the
    highest-ranking main-clause referent. Replaced foci go on their stacks.
    """
    agent = a.agent
    af = agent.referent if agent else prev.af

    pronouns = a.pronouns
    if prev.df is not None and any(prev.df in entry.covers for entry in pronouns):
        df = prev.df
        rule = "kept"
    elif pronouns:
        df = _highest_ranking(pronouns).referent  # type: ignore[union-attr]
        rule = "pronoun"
    elif a.main:
        df = _highest_ranking(a.main).referent  # type: ignore[union-attr]
        rule = "referent"
    else:
        df = prev.df
        rule = "persisted"

    afs = _push(prev.afs, prev.af if af != prev.af else None, af)
    dfs = _push(prev.dfs, prev.df if df != prev.df else None, df)
    state = FocusState(
        af=af,
        pafl=_animate_others(a, af),
        afs=afs,
        df=df,
        pdfl=_unique((entry.referent for entry in a.main), exclude=[df]),
        dfs=dfs,
    )
    logger.debug(f"Focus after sentence {a.index} (DF {rule}): {state}")
    return state


def tagged_stack_order(
    state: FocusState, role: Role, distinguish: bool = True
) -> list[tuple[str, str]]:
    """The stacks, tops first, each referent paired with the stack it sits on."""
    afs = [(ref, "afs") for ref in reversed(state.afs)]
    dfs = [(ref, "dfs") for ref in reversed(state.dfs)]
    if role is Role.AG or not distinguish:
        return afs + dfs
    return dfs + afs


def tagged_candidate_order(
    state: FocusState, role: Role, distinguish: bool = True, stacks: bool = True
) -> list[tuple[OrderItem, str]]:
    """The store ordering for a pronoun in `role`, each item tagged with its slot.

    A referent held by several stores appears once per slot, so callers can
    tell an AF proposal from a DF proposal of the same referent.
    """
    actor = [(state.af, "af"), *((ref, "pafl") for ref in state.pafl)]
    discourse = [(state.df, "df"), *((ref, "pdfl") for ref in state.pdfl)]
    if role is Role.AG or not distinguish:
        first, second = actor, discourse
    else:
        first, second = discourse, actor

    tagged: list[tuple[Optional[OrderItem], str]] = [*first, (ISC, "isc"), *second]
    if stacks:
        tagged.extend(tagged_stack_order(state, role, distinguish))
    return [(item, slot) for item, slot in tagged if item is not None]


def base_candidate_order(
    state: FocusState, role: Role, distinguish: bool = True, stacks: bool = True
) -> list[OrderItem]:
    """Order the focus stores for a pronoun in `role`, with the ISC slot.

    AG pronouns try the actor track first, other pronouns the discourse
    track. Without the AF/DF distinction every pronoun gets the AG order.
    """
    order: list[OrderItem] = []
    for item, _ in tagged_candidate_order(state, role, distinguish, stacks):
        if item not in order:
            order.append(item)
    return order
