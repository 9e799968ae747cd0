"""Scoring resolutions against hand-annotated gold bindings."""

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .constants import DEFAULT_WORKERS, PHENOMENA
from .errors import FocusDrtError, ParseError
from .hooks import RatificationHook
from .loader import load_discourse
from .logging import track
from .models import NPPath, Role
from .resolver import (
    AnaphorKind,
    PositionClass,
    PronounContext,
    Resolution,
    RuleConfig,
    resolve_discourse,
)
from .schema import schema_problems

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GoldBinding:
    """Expected antecedent of one anaphor.

    Each element of `antecedent` is a referent id or the `s:c:a` path of the
    noun phrase that introduces the referent; several elements make a
    combination antecedent.
    """

    occurrence: NPPath
    antecedent: tuple[str, ...]
    phenomenon: Optional[str] = None


@dataclass(frozen=True)
class GoldItem:
    discourse: Path
    bindings: tuple[GoldBinding, ...] = ()


@dataclass(frozen=True)
class GoldCorpus:
    items: tuple[GoldItem, ...] = ()


def _gold_binding(raw: dict[str, Any]) -> GoldBinding:
    antecedent = raw["antecedent"]
    if isinstance(antecedent, str):
        antecedent = [antecedent]
    return GoldBinding(NPPath.parse(raw["occurrence"]), tuple(antecedent), raw.get("phenomenon"))


def parse_gold(data: str, base: Path, source: str = "<gold>") -> GoldCorpus:
    """Parse a gold file.

    Args:
        data: File contents
        base: Directory that relative discourse paths are resolved against
        source: Name used in error messages

    Raises:
        ParseError: when the file is not JSON or breaks the gold schema
    """
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as e:
        raise ParseError(f"{source} is not valid JSON", [f"line {e.lineno}: {e.msg}"]) from e

    problems = schema_problems("gold", raw, root="gold")
    if not isinstance(raw, dict) or not isinstance(raw.get("items"), list):
        raise ParseError(f"{source} is not a gold file", problems)
    if problems:
        raise ParseError(f"{source} has malformed entries", problems)

    items = tuple(
        GoldItem(
            base / item["discourse"],
            tuple(_gold_binding(b) for b in item.get("bindings", [])),
        )
        for item in raw["items"]
    )
    logger.info(f"Loaded {len(items)} gold items from {source}")
    return GoldCorpus(items)


def load_gold(path: Path) -> GoldCorpus:
    try:
        data = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read {path}", [str(e)]) from e
    return parse_gold(data, Path(path).parent, source=str(path))


@dataclass(frozen=True)
class Tally:
    """Counts for one slice of the report. Always correct <= resolved <= total."""

    total: int = 0
    resolved: int = 0
    correct: int = 0

    def __add__(self, other: "Tally") -> "Tally":
        return Tally(
            self.total + other.total,
            self.resolved + other.resolved,
            self.correct + other.correct,
        )

    @property
    def accuracy(self) -> float:
        """Correct bindings among the resolved ones."""
        if self.resolved == 0:
            return 0.0
        return self.correct / self.resolved

    @property
    def recall(self) -> float:
        if self.total == 0:
            return 0.0
        return self.correct / self.total

    def to_dict(self) -> dict[str, Any]:
        return {
            "total": self.total,
            "resolved": self.resolved,
            "correct": self.correct,
            "accuracy": round(self.accuracy, 4),
            "recall": round(self.recall, 4),
        }


@dataclass(frozen=True)
class Score:
    occurrence: NPPath
    phenomenon: str
    expected: tuple[str, ...]
    predicted: tuple[str, ...]

    @property
    def resolved(self) -> bool:
        return bool(self.predicted)

    @property
    def correct(self) -> bool:
        return self.resolved and set(self.predicted) == set(self.expected)

    @property
    def tally(self) -> Tally:
        return Tally(1, int(self.resolved), int(self.correct))


@dataclass(frozen=True)
class ItemResult:
    """Outcome for one gold item; `error` is set when the item could not be run."""

    index: int
    discourse: Path
    scores: tuple[Score, ...] = ()
    error: Optional[str] = None


@dataclass(frozen=True)
class AccuracyReport:
    items: tuple[ItemResult, ...] = ()
    overall: Tally = Tally()
    by_phenomenon: dict[str, Tally] = field(default_factory=dict)

    @property
    def errored(self) -> tuple[ItemResult, ...]:
        return tuple(item for item in self.items if item.error is not None)

    @property
    def failures(self) -> list[tuple[ItemResult, Score]]:
        return [(item, s) for item in self.items for s in item.scores if not s.correct]

    def to_dict(self) -> dict[str, Any]:
        return {
            **self.overall.to_dict(),
            "phenomena": {name: tally.to_dict() for name, tally in self.by_phenomenon.items()},
            "errored": [
                {"discourse": item.discourse.name, "error": item.error} for item in self.errored
            ],
            "failures": [
                {
                    "discourse": item.discourse.name,
                    "occurrence": str(score.occurrence),
                    "expected": list(score.expected),
                    "predicted": list(score.predicted),
                }
                for item, score in self.failures
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2) + "\n"

    def format_table(self) -> str:
        """Fixed-format text report: one row per phenomenon and an overall row."""
        header = (
            f"{'phenomenon':<12}{'total':>7}{'resolved':>10}"
            f"{'correct':>9}{'accuracy':>10}{'recall':>8}"
        )
        rows = [header, "-" * len(header)]
        for name, tally in [*self.by_phenomenon.items(), ("overall", self.overall)]:
            rows.append(
                f"{name:<12}{tally.total:>7}{tally.resolved:>10}{tally.correct:>9}"
                f"{tally.accuracy:>10.3f}{tally.recall:>8.3f}"
            )
        for item, score in self.failures:
            predicted = "+".join(score.predicted) or "unresolved"
            rows.append(
                f"FAIL {item.discourse.name} {score.occurrence}: "
                f"expected {'+'.join(score.expected)}, got {predicted}"
            )
        for item in self.errored:
            rows.append(f"ERROR {item.discourse.name}: {item.error}")
        return "\n".join(rows) + "\n"


def classify_phenomenon(context: PronounContext) -> str:
    """Which phenomenon an anaphor exercises."""
    if context.kind is AnaphorKind.NULL:
        return "ellipsis"
    if context.kind is AnaphorKind.REFLEXIVE:
        return "reflexive"
    if context.position_class is not PositionClass.SIMPLE:
        return "relative"
    if context.role is Role.AG:
        return "recency"
    return "focus"


def _expected_referents(gold: GoldBinding, resolution: Resolution) -> tuple[str, ...]:
    expected = []
    for item in gold.antecedent:
        if ":" in item:
            path = NPPath.parse(item)
            expected.append(resolution.np_referents.get(path, item))
        else:
            expected.append(item)
    return tuple(expected)


def score_item(item: GoldItem, resolution: Resolution) -> list[Score]:
    """Compare a resolution with the item's gold bindings."""
    scores = []
    for gold in item.bindings:
        binding = resolution.binding_for(gold.occurrence)
        context = resolution.contexts.get(gold.occurrence)
        if binding is None or context is None:
            logger.warning(
                f"{item.discourse.name}: no anaphor at gold occurrence {gold.occurrence}"
            )
        phenomenon = gold.phenomenon or (classify_phenomenon(context) if context else "focus")
        predicted = binding.antecedent if binding is not None else ()
        scores.append(
            Score(gold.occurrence, phenomenon, _expected_referents(gold, resolution), predicted)
        )
    return scores


def _run_item(
    index: int, item: GoldItem, cfg: RuleConfig, hook: Optional[RatificationHook]
) -> ItemResult:
    try:
        discourse = load_discourse(item.discourse)
        resolution = resolve_discourse(discourse, cfg, hook)
    except FocusDrtError as e:
        logger.error(f"Gold item {index} ({item.discourse.name}) failed: {e}")
        return ItemResult(index, item.discourse, error=str(e))
    return ItemResult(index, item.discourse, tuple(score_item(item, resolution)))


def aggregate(results: list[ItemResult]) -> AccuracyReport:
    by_phenomenon = {name: Tally() for name in PHENOMENA}
    overall = Tally()
    for result in results:
        for score in result.scores:
            by_phenomenon[score.phenomenon] += score.tally
            overall += score.tally
    return AccuracyReport(tuple(results), overall, by_phenomenon)


def evaluate(
    corpus: GoldCorpus,
    cfg: Optional[RuleConfig] = None,
    workers: int = DEFAULT_WORKERS,
    hook: Optional[RatificationHook] = None,
) -> AccuracyReport:
    """Resolve every gold item and score the bindings.

    Items run in a thread pool; results keep the corpus order. Items whose
    file is missing or malformed are reported as errored and skipped.

    Args:
        corpus: Gold items to score
        cfg: Rule switches (defaults to `RuleConfig()`)
        workers: Number of items resolved in parallel
        hook: Ratification hook overriding `cfg.hook`

    Returns:
        Overall and per-phenomenon tallies, with failures and errored items
    """
    cfg = cfg or RuleConfig()
    items = corpus.items
    logger.info(f"Evaluating {len(items)} gold items with {workers} workers")
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        mapped = pool.map(
            _run_item, range(len(items)), items, [cfg] * len(items), [hook] * len(items)
        )
        results = list(track(mapped, total=len(items), description="Evaluating..."))

    report = aggregate(results)
    logger.info(
        f"{report.overall.correct} of {report.overall.total} gold bindings correct "
        f"({len(report.errored)} items errored)"
    )
    return report
