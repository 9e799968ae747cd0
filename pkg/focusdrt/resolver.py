"""Anaphora resolution: candidate orderings, filters, ratification and the discourse loop."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Optional, Union

from .builder import ReferentRegistry, SentenceDelta, build_sentence_drs
from .constants import DEFAULT_HOOK, EXEMPT_ROLES, MEMBER_PREDICATE
from .drs import ROOT, Atom, Drs, DrsLocation, accessible_referents, merge_drs, substitute
from .focus import (
    ISC,
    Entry,
    FocusState,
    OrderItem,
    SentenceAnalysis,
    init_focus,
    tagged_candidate_order,
    tagged_stack_order,
    update_focus,
)
from .hooks import RatificationHook, get_hook
from .models import (
    Animacy,
    Clause,
    Discourse,
    Features,
    Gender,
    NPKind,
    NPPath,
    Number,
    Role,
    Sentence,
)
from .utils import ClauseFrame, Mention, mentions

logger = logging.getLogger(__name__)


class AnaphorKind(Enum):
    EXPLICIT = "explicit"
    NULL = "null"
    REFLEXIVE = "reflexive"

    @classmethod
    def from_np_kind(cls, kind: NPKind) -> "AnaphorKind":
        if kind is NPKind.NULL_PRONOUN:
            return cls.NULL
        if kind is NPKind.REFLEXIVE:
            return cls.REFLEXIVE
        return cls.EXPLICIT

    def __str__(self) -> str:
        return self.value


class PositionClass(Enum):
    """Where a pronoun sits relative to the relative clauses around it."""

    SIMPLE = "simple"
    IN_RELATIVE = "in_relative"
    MAIN_BEFORE_RELATIVE = "main_before_relative"
    MAIN_AFTER_RELATIVE = "main_after_relative"
    SENTENCE_AFTER_RELATIVE = "sentence_after_relative"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RuleConfig:
    """Switches for the resolution rules."""

    recency: bool = True
    af_df_distinction: bool = True
    hook: str = DEFAULT_HOOK
    # Try enclosing-clause referents before AF/PAFL for AG pronouns in relatives
    relative_agent_main_first: bool = False


@dataclass(frozen=True)
class PronounContext:
    """Everything the candidate generator and the filters know about an anaphor."""

    occurrence: NPPath
    kind: AnaphorKind
    role: Role
    clause_depth: int
    position_class: PositionClass
    features: Features
    predicate: str = ""
    location: DrsLocation = ROOT
    coarguments: frozenset[str] = frozenset()


@dataclass(frozen=True)
class Candidate:
    """A proposed antecedent: one referent, or several for a combination of foci."""

    referents: tuple[str, ...]
    source: str

    @property
    def is_combination(self) -> bool:
        return len(self.referents) > 1


@dataclass(frozen=True)
class Binding:
    """An anaphor bound to its antecedent by the named rule."""

    occurrence: NPPath
    antecedent: tuple[str, ...]
    rule: str
    rank_tried: int

    @property
    def resolved(self) -> bool:
        return True


@dataclass(frozen=True)
class UnresolvedBinding:
    """An anaphor for which no candidate survived."""

    occurrence: NPPath
    rule: str
    rank_tried: int
    antecedent: tuple[str, ...] = ()

    @property
    def resolved(self) -> bool:
        return False


AnyBinding = Union[Binding, UnresolvedBinding]


class Verdict(Enum):
    ACCEPT = "accept"
    REJECT = "reject"


@dataclass(frozen=True)
class SentenceTrace:
    """Focus state after a sentence together with the bindings made in it."""

    index: int
    state: FocusState
    bindings: tuple[AnyBinding, ...] = ()


@dataclass
class Resolution:
    """Result of resolving a whole discourse."""

    discourse_id: str
    bindings: tuple[AnyBinding, ...]
    drs: Drs
    trace: tuple[SentenceTrace, ...]
    registry: ReferentRegistry
    np_referents: dict[NPPath, str] = field(default_factory=dict)
    candidates: dict[NPPath, tuple[Candidate, ...]] = field(default_factory=dict)
    contexts: dict[NPPath, PronounContext] = field(default_factory=dict)

    def binding_for(self, occurrence: NPPath) -> Optional[AnyBinding]:
        return next((b for b in self.bindings if b.occurrence == occurrence), None)


class SentenceView:
    """The current sentence as the resolver sees it, partially resolved."""

    def __init__(
        self, sentence: Sentence, delta: SentenceDelta, previous: Optional[SentenceAnalysis]
    ):
        self.sentence = sentence
        self.previous = previous
        self.mentions = mentions(sentence)
        self._by_path = {mention.path: mention for mention in self.mentions}
        self._referents: dict[NPPath, str] = dict(delta.np_referents)
        relatives = [ordinal for ordinal, _ in sentence.main.relatives()]
        self.first_relative: Optional[int] = min(relatives) if relatives else None

    def mention(self, path: NPPath) -> Mention:
        return self._by_path[path]

    def referent_of(self, path: NPPath) -> Optional[str]:
        return self._referents.get(path)

    def resolve(self, path: NPPath, referent: str) -> None:
        self._referents[path] = referent

    @property
    def referents(self) -> dict[NPPath, str]:
        return dict(self._referents)

    def classify(self, mention: Mention) -> PositionClass:
        if mention.depth > 0:
            return PositionClass.IN_RELATIVE
        if self.first_relative is not None:
            if mention.path.arg < self.first_relative:
                return PositionClass.MAIN_BEFORE_RELATIVE
            return PositionClass.MAIN_AFTER_RELATIVE
        if self.previous is not None and self.previous.has_relatives:
            return PositionClass.SENTENCE_AFTER_RELATIVE
        return PositionClass.SIMPLE

    def _clause_referent(self, clause: Clause, ordinal: int) -> Optional[str]:
        return self.referent_of(NPPath(self.sentence.index, clause.id, ordinal))

    def coarguments(self, mention: Mention) -> frozenset[str]:
        """Referents filling the other core roles of the mention's clause."""
        found = set()
        for ordinal, arg in enumerate(mention.clause.args):
            if ordinal == mention.path.arg or not arg.role.is_core:
                continue
            ref = self._clause_referent(mention.clause, ordinal)
            if ref is not None:
                found.add(ref)
        return frozenset(found)

    def clause_agent(self, clause: Clause) -> Optional[str]:
        agent = clause.agent
        if agent is None:
            return None
        return self._clause_referent(clause, agent[0])

    def main_agent(self) -> Optional[str]:
        return self.clause_agent(self.sentence.main)

    def context(self, path: NPPath, location: DrsLocation) -> PronounContext:
        mention = self.mention(path)
        return PronounContext(
            occurrence=path,
            kind=AnaphorKind.from_np_kind(mention.np.kind),
            role=mention.role,
            clause_depth=mention.depth,
            position_class=self.classify(mention),
            features=mention.np.features,
            predicate=mention.clause.predicate,
            location=location,
            coarguments=self.coarguments(mention),
        )

    def preceding(self, mention: Mention, main_only: bool = False) -> list[str]:
        """Intrasentential candidates: referents mentioned earlier in the sentence.

        Shallower clauses come first, then surface order. Core co-arguments
        of the mention's own clause are left out.
        """
        excluded: frozenset[str] = frozenset()
        if mention.role.value not in EXEMPT_ROLES:
            excluded = self.coarguments(mention)
        earlier = [
            m
            for m in self.mentions
            if m.position < mention.position
            and m.np.kind is not NPKind.GAP
            and not (main_only and m.depth > 0)
        ]
        earlier.sort(key=lambda m: (m.depth, m.position))
        refs = (self.referent_of(m.path) for m in earlier)
        return _unique(ref for ref in refs if ref is not None and ref not in excluded)

    def enclosing_referents(self, mention: Mention, agent_first: bool) -> list[str]:
        """Referents of the clauses enclosing a relative-clause mention.

        Main clause first, then nesting relatives outward-in; within a clause
        by role ranking (the agent first for AG pronouns).
        """
        found: list[str] = []
        for frame in mention.frame.lineage():
            found.extend(self._ranked_clause_referents(frame, agent_first))
        return _unique(found)

    def _ranked_clause_referents(self, frame: ClauseFrame, agent_first: bool) -> list[str]:
        ranked = []
        for ordinal, arg in enumerate(frame.clause.args):
            ref = self._clause_referent(frame.clause, ordinal)
            if ref is None:
                continue
            lead = 0 if agent_first and arg.role is Role.AG else 1
            ranked.append(((lead, arg.role.rank, ordinal), ref))
        return [ref for _, ref in sorted(ranked)]

    def relative_referents(self, mention: Mention) -> list[str]:
        """Referents introduced by relative clauses before the mention, shallowest first."""
        earlier = [
            m
            for m in self.mentions
            if m.depth > 0 and m.position < mention.position and m.np.kind.is_referential
        ]
        earlier.sort(key=lambda m: (m.depth, m.position))
        return _unique(self.referent_of(m.path) for m in earlier)  # type: ignore[misc]

    def analysis(self, registry: ReferentRegistry) -> SentenceAnalysis:
        """Summarize the resolved sentence for the focus engine."""
        main: list[Entry] = []
        relative: dict[int, list[str]] = {}
        relative_pronouns: list[tuple[NPPath, str]] = []
        for mention in self.mentions:
            ref = self.referent_of(mention.path)
            if ref is None:
                continue
            if mention.depth == 0:
                referent = registry.get(ref)
                main.append(
                    Entry(
                        referent=ref,
                        role=mention.role,
                        animacy=referent.features.animacy,
                        anaphoric=mention.np.kind.is_anaphoric,
                        covers=referent.members or (ref,),
                    )
                )
            elif mention.np.kind.is_anaphoric:
                relative_pronouns.append((mention.path, ref))
            elif mention.np.kind.is_referential:
                relative.setdefault(mention.depth, []).append(ref)

        main_refs = {entry.referent for entry in main}
        groups = tuple(
            tuple(ref for ref in _unique(relative[depth]) if ref not in main_refs)
            for depth in sorted(relative)
        )
        theme = next((entry.referent for entry in main if entry.role is Role.TH), None)
        return SentenceAnalysis(
            index=self.sentence.index,
            main=tuple(main),
            relative=groups,
            relative_pronouns=tuple(relative_pronouns),
            theme=theme,
            relative_clauses=sum(1 for m in self.mentions if m.np.relative is not None),
        )


def _unique(items: Iterable[str]) -> list[str]:
    seen: list[str] = []
    for item in items:
        if item not in seen:
            seen.append(item)
    return seen


def rule_row(ctx: PronounContext) -> str:
    """Name of the ordering rule that applies to `ctx`."""
    if ctx.kind is AnaphorKind.REFLEXIVE:
        return "reflexive-agent"
    if ctx.kind is AnaphorKind.NULL:
        if ctx.role is not Role.AG:
            return "null-nonagent"
        if ctx.position_class is PositionClass.IN_RELATIVE:
            return "null-agent-relative"
        return "null-agent"
    track = "agent" if ctx.role is Role.AG else "nonagent"
    rows = {
        PositionClass.SIMPLE: f"explicit-{track}",
        PositionClass.IN_RELATIVE: f"explicit-{track}-relative",
        PositionClass.MAIN_BEFORE_RELATIVE: f"explicit-{track}-before-relative",
        PositionClass.MAIN_AFTER_RELATIVE: f"explicit-{track}-after-relative",
        PositionClass.SENTENCE_AFTER_RELATIVE: f"explicit-{track}-following-relative",
    }
    return rows[ctx.position_class]


Tagged = tuple[OrderItem, str]


def _expand(order: Iterable[Tagged], isc: list[str]) -> list[Candidate]:
    """Candidates in store order; the ISC slot expands to the intrasentential referents."""
    expanded: list[Candidate] = []
    for item, slot in order:
        if item is ISC:
            expanded.extend(Candidate((ref,), "isc") for ref in isc)
        else:
            expanded.append(Candidate((item,), slot))  # type: ignore[arg-type]
    return expanded


def _split_at_isc(order: list[Tagged]) -> tuple[list[Tagged], list[Tagged]]:
    cut = next(i for i, (item, _) in enumerate(order) if item is ISC)
    return order[:cut], order[cut:]


def _with_combinations(
    base: Optional[str], source: str, others: Iterable[Optional[str]], ctx: PronounContext
) -> list[Candidate]:
    """A focus, then (for plural anaphors) that focus combined with each other store member."""
    if base is None:
        return []
    found = [Candidate((base,), source)]
    if ctx.features.number is Number.PL:
        partners = _unique(ref for ref in others if ref is not None and ref != base)
        found.extend(Candidate((base, ref), f"{source}-combination") for ref in partners)
    return found


def _deduplicate(candidates: Iterable[Candidate]) -> list[Candidate]:
    seen: set[tuple[str, ...]] = set()
    kept = []
    for candidate in candidates:
        if candidate.referents not in seen:
            seen.add(candidate.referents)
            kept.append(candidate)
    return kept


def candidate_sequence(
    ctx: PronounContext,
    state: FocusState,
    view: SentenceView,
    registry: ReferentRegistry,
    cfg: Optional[RuleConfig] = None,
) -> list[Candidate]:
    """Order the antecedent candidates for one anaphor.

    Reflexives go to their clause's agent; null pronouns to AF (agents) or DF
    (others), or combinations including them; explicit pronouns follow the
    store orderings, adjusted to the relative clauses around them.

    Args:
        ctx: The anaphor's role, kind, features and position class
        state: Focus stores after the previous sentence
        view: The current sentence with the referents resolved so far
        registry: Every referent of the discourse
        cfg: Rule switches (defaults to `RuleConfig()`)

    Returns:
        Candidates in the order they are tried, without duplicates, copies, or
        inanimate referents proposed by the actor track
    """
    cfg = cfg or RuleConfig()
    mention = view.mention(ctx.occurrence)

    if ctx.kind is AnaphorKind.REFLEXIVE:
        agent = view.clause_agent(mention.clause)
        return [Candidate((agent,), "clause-agent")] if agent else []

    if ctx.kind is AnaphorKind.NULL:
        if ctx.role is Role.AG:
            if ctx.position_class is PositionClass.IN_RELATIVE:
                agent = view.main_agent()
                return [Candidate((agent,), "main-agent")] if agent else []
            foci = _with_combinations(
                state.af, "af", [*state.pafl, state.df, *state.pdfl], ctx
            )
        else:
            foci = _with_combinations(
                state.df, "df", [*state.pdfl, state.af, *state.pafl], ctx
            )
        return _admissible(foci, registry)

    distinguish = cfg.af_df_distinction
    position = ctx.position_class
    found = []

    if (
        cfg.recency
        and ctx.role is Role.AG
        and position in (PositionClass.SIMPLE, PositionClass.SENTENCE_AFTER_RELATIVE)
        and view.previous is not None
        and view.previous.last_referent is not None
    ):
        found.append(Candidate((view.previous.last_referent,), "recency"))

    if position is PositionClass.IN_RELATIVE:
        agent_pronoun = ctx.role is Role.AG
        enclosing = [
            Candidate((ref,), "enclosing")
            for ref in view.enclosing_referents(mention, agent_first=agent_pronoun)
        ]
        order = tagged_candidate_order(state, ctx.role, distinguish)
        isc = view.preceding(mention)
        if agent_pronoun:
            actors, rest = _split_at_isc(order)
            if cfg.relative_agent_main_first:
                found += enclosing + _expand(actors, isc)
            else:
                found += _expand(actors, isc) + enclosing
            found += _expand(rest, isc)
        else:
            found += enclosing + _expand(order, isc)

    elif position is PositionClass.MAIN_AFTER_RELATIVE:
        order = tagged_candidate_order(state, ctx.role, distinguish, stacks=False)
        found += _expand(order, view.preceding(mention, main_only=True))
        found += [Candidate((ref,), "relative") for ref in view.relative_referents(mention)]
        found += _expand(tagged_stack_order(state, ctx.role, distinguish), [])

    elif position is PositionClass.SENTENCE_AFTER_RELATIVE:
        order = tagged_candidate_order(state, ctx.role, distinguish, stacks=False)
        found += _expand(order, view.preceding(mention))
        previous = view.previous.relative_referents() if view.previous else []
        found += [Candidate((ref,), "previous-relative") for ref in previous]
        found += _expand(tagged_stack_order(state, ctx.role, distinguish), [])

    else:
        # simple sentences, and main-clause pronouns preceding a relative clause
        order = tagged_candidate_order(state, ctx.role, distinguish)
        found += _expand(order, view.preceding(mention))

    return _deduplicate(_admissible(found, registry))


def _admissible(candidates: list[Candidate], registry: ReferentRegistry) -> list[Candidate]:
    """Drop consequent-box copies, and inanimate referents proposed by AF or PAFL.

    The animacy check looks at the slot a candidate came from, so a referent
    that is both AF and DF still reaches a non-agent pronoun through DF.
    """
    kept = []
    for candidate in candidates:
        referents = [registry.get(ref) for ref in candidate.referents]
        if any(r.is_copy for r in referents):
            continue
        if candidate.source in ("af", "pafl") and any(
            r.features.animacy is Animacy.INANIMATE for r in referents
        ):
            continue
        kept.append(candidate)
    return kept


def agreement_filter(
    candidate: Candidate, ctx: PronounContext, registry: ReferentRegistry
) -> bool:
    """Checks done during focusing: gender, number and the co-argument constraint."""
    referents = [registry.get(ref) for ref in candidate.referents]
    if candidate.is_combination:
        if ctx.features.number is not Number.PL:
            return False
        if ctx.features.gender is Gender.FEM and any(
            r.features.gender is Gender.MASC for r in referents
        ):
            return False
    else:
        features = referents[0].features
        if not ctx.features.gender_compatible(features):
            return False
        if not ctx.features.number_compatible(features):
            return False

    if ctx.kind is not AnaphorKind.REFLEXIVE and ctx.role.value not in EXEMPT_ROLES:
        if set(candidate.referents) & ctx.coarguments:
            return False
    return True


def bind_reflexive(
    clause: Clause, occurrence: NPPath, referent_of: Callable[[NPPath], Optional[str]]
) -> AnyBinding:
    """Bind a reflexive to the agent of its own clause."""
    agent = clause.agent
    ref = None
    if agent is not None:
        ref = referent_of(NPPath(occurrence.sentence, clause.id, agent[0]))
    if ref is None:
        logger.warning(f"Reflexive at {occurrence} has no agent to bind to")
        return UnresolvedBinding(occurrence, "reflexive-agent", 0)
    return Binding(occurrence, (ref,), "reflexive-agent", 1)


def ratify(
    binding: Binding,
    drs: Drs,
    hook: RatificationHook,
    registry: ReferentRegistry,
    context: PronounContext,
) -> Verdict:
    """Ask the ratification hook about a binding that passed every other check."""
    accepted = hook.ratify(binding, drs, registry, context)
    return Verdict.ACCEPT if accepted else Verdict.REJECT


def select(
    candidates: Iterable[Candidate], test: Callable[[Candidate], bool]
) -> tuple[Optional[Candidate], int]:
    """First candidate passing `test`, with the number of candidates tried."""
    tried = 0
    for candidate in candidates:
        tried += 1
        if test(candidate):
            return candidate, tried
    return None, tried


class DiscourseResolver:
    """Resolves every anaphor of a discourse, sentence by sentence.

    Per sentence: build the DRS fragment, merge it, resolve anaphors left to
    right against the focus state of the previous sentence, then move the focus.
    """

    def __init__(
        self, cfg: Optional[RuleConfig] = None, hook: Optional[RatificationHook] = None
    ):
        self.cfg = cfg or RuleConfig()
        self.hook = hook if hook is not None else get_hook(self.cfg.hook)
        logger.debug(f"Using ratification hook {self.hook.__class__.__name__}")

    def resolve(self, discourse: Discourse) -> Resolution:
        registry = ReferentRegistry.for_discourse(discourse)
        drs = Drs()
        state = FocusState()
        previous: Optional[SentenceAnalysis] = None
        bindings: list[AnyBinding] = []
        trace: list[SentenceTrace] = []
        np_referents: dict[NPPath, str] = {}
        candidates: dict[NPPath, tuple[Candidate, ...]] = {}
        contexts: dict[NPPath, PronounContext] = {}

        for sentence in discourse.sentences:
            delta = build_sentence_drs(sentence, registry)
            offset = len(drs.conditions)
            drs = merge_drs(drs, delta.fragment)
            view = SentenceView(sentence, delta, previous)

            made: list[AnyBinding] = []
            for slot in delta.slots:
                ctx = view.context(slot.path, slot.location.rebase(offset))
                ordered = candidate_sequence(ctx, state, view, registry, self.cfg)
                contexts[slot.path] = ctx
                candidates[slot.path] = tuple(ordered)

                binding = self._bind(ctx, ordered, view, registry, drs)
                made.append(binding)
                if not binding.resolved:
                    logger.warning(f"Could not resolve the anaphor at {slot.path}")
                    continue

                referent = binding.antecedent[0]
                if len(binding.antecedent) > 1:
                    kind = view.mention(slot.path).np.kind
                    group = registry.mint_group(
                        slot.path, binding.antecedent, ctx.clause_depth, kind
                    )
                    members = tuple(
                        Atom(MEMBER_PREDICATE, (m, group.id)) for m in binding.antecedent
                    )
                    drs = merge_drs(drs, Drs((group.id,), members), ctx.location)
                    referent = group.id
                view.resolve(slot.path, referent)
                drs = substitute(drs, {slot.placeholder: referent})

            analysis = view.analysis(registry)
            state = init_focus(analysis) if previous is None else update_focus(state, analysis)
            trace.append(SentenceTrace(sentence.index, state, tuple(made)))
            bindings.extend(made)
            np_referents.update(view.referents)
            previous = analysis

        resolved = sum(1 for b in bindings if b.resolved)
        logger.info(
            f"Resolved {resolved} of {len(bindings)} anaphors in discourse {discourse.id}"
        )
        return Resolution(
            discourse_id=discourse.id,
            bindings=tuple(bindings),
            drs=drs,
            trace=tuple(trace),
            registry=registry,
            np_referents=np_referents,
            candidates=candidates,
            contexts=contexts,
        )

    def _bind(
        self,
        ctx: PronounContext,
        ordered: list[Candidate],
        view: SentenceView,
        registry: ReferentRegistry,
        drs: Drs,
    ) -> AnyBinding:
        row = rule_row(ctx)
        if ctx.kind is AnaphorKind.REFLEXIVE:
            clause = view.mention(ctx.occurrence).clause
            binding = bind_reflexive(clause, ctx.occurrence, view.referent_of)
            if isinstance(binding, Binding) and (
                ratify(binding, drs, self.hook, registry, ctx) is Verdict.REJECT
            ):
                return UnresolvedBinding(ctx.occurrence, row, binding.rank_tried)
            return binding

        accessible = set(accessible_referents(drs, ctx.location))

        def passes(candidate: Candidate) -> bool:
            if not agreement_filter(candidate, ctx, registry):
                logger.debug(f"{ctx.occurrence}: {candidate.referents} fails agreement")
                return False
            if not all(ref in accessible for ref in candidate.referents):
                logger.debug(f"{ctx.occurrence}: {candidate.referents} is not accessible")
                return False
            proposal = Binding(ctx.occurrence, candidate.referents, f"{row}:{candidate.source}", 0)
            if ratify(proposal, drs, self.hook, registry, ctx) is Verdict.REJECT:
                logger.debug(f"{ctx.occurrence}: {candidate.referents} rejected at ratification")
                return False
            return True

        winner, tried = select(ordered, passes)
        if winner is None:
            return UnresolvedBinding(ctx.occurrence, row, tried)
        logger.debug(f"{ctx.occurrence} -> {winner.referents} ({winner.source}, rank {tried})")
        return Binding(ctx.occurrence, winner.referents, f"{row}:{winner.source}", tried)


def resolve_discourse(
    discourse: Discourse,
    cfg: Optional[RuleConfig] = None,
    hook: Optional[RatificationHook] = None,
) -> Resolution:
    """Resolve every pronoun, null pronoun and reflexive of `discourse`.

    Args:
        discourse: A validated discourse
        cfg: Rule switches (defaults to `RuleConfig()`)
        hook: Ratification hook; when omitted the hook named by `cfg.hook` is used

    Returns:
        The bindings in discourse order, the final DRS and the focus trace
    """
    return DiscourseResolver(cfg, hook).resolve(discourse)
