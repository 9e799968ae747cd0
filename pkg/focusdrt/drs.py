"""Discourse representation structures: boxes, locations, merge and accessibility."""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterator, Mapping, Union

from .errors import LocationError

logger = logging.getLogger(__name__)


class Side(Enum):
    """Which sub-box of an implication a location step enters."""

    ANTECEDENT = "antecedent"
    CONSEQUENT = "consequent"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Atom:
    """A predicate over referent ids, e.g. `owns(x,y)`."""

    predicate: str
    args: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.predicate}({','.join(self.args)})"


@dataclass(frozen=True)
class Equality:
    """Identity of two referents, used to link consequent copies: `z = x`."""

    left: str
    right: str

    def __str__(self) -> str:
        return f"{self.left} = {self.right}"


@dataclass(frozen=True)
class Implication:
    """A conditional: antecedent box => consequent box."""

    antecedent: "Drs"
    consequent: "Drs"

    def side(self, side: Side) -> "Drs":
        return self.antecedent if side is Side.ANTECEDENT else self.consequent


Condition = Union[Atom, Equality, Implication]


@dataclass(frozen=True)
class Drs:
    """A box: an ordered universe of referent ids over an ordered list of conditions."""

    universe: tuple[str, ...] = ()
    conditions: tuple[Condition, ...] = ()

    def __add__(self, other: "Drs") -> "Drs":
        """Concatenate two boxes (the merge of two deltas at the same place)."""
        return Drs(self.universe + other.universe, self.conditions + other.conditions)

    @property
    def is_empty(self) -> bool:
        return not self.universe and not self.conditions

    def box(self, at: "DrsLocation") -> "Drs":
        """Return the box `at` addresses."""
        box = self
        for step in at.path:
            if not 0 <= step.condition < len(box.conditions):
                raise LocationError(f"No condition {step.condition} at {at}")
            condition = box.conditions[step.condition]
            if not isinstance(condition, Implication):
                raise LocationError(f"Condition {step.condition} at {at} is not an implication")
            box = condition.side(step.side)
        return box

    def referents(self) -> list[str]:
        """Every referent id in every universe, depth-first."""
        found = list(self.universe)
        for condition in self.conditions:
            if isinstance(condition, Implication):
                found.extend(condition.antecedent.referents())
                found.extend(condition.consequent.referents())
        return found


@dataclass(frozen=True)
class Step:
    condition: int
    side: Side


@dataclass(frozen=True)
class DrsLocation:
    """Path from the root box to a nested box; the empty path is the root."""

    path: tuple[Step, ...] = ()

    def child(self, condition: int, side: Side) -> "DrsLocation":
        return DrsLocation(self.path + (Step(condition, side),))

    def prefixes(self) -> Iterator["DrsLocation"]:
        """This location and every ancestor, innermost first."""
        for length in range(len(self.path), -1, -1):
            yield DrsLocation(self.path[:length])

    def rebase(self, offset: int) -> "DrsLocation":
        """Shift the first step, for a fragment appended after `offset` root conditions."""
        if not self.path:
            return self
        first = self.path[0]
        return DrsLocation((Step(first.condition + offset, first.side),) + self.path[1:])

    def __str__(self) -> str:
        if not self.path:
            return "root"
        return "/".join(f"{step.condition}.{step.side}" for step in self.path)


ROOT = DrsLocation()


def iter_boxes(drs: Drs, at: DrsLocation = ROOT) -> Iterator[tuple[DrsLocation, Drs]]:
    """Yield every box of `drs` with its location, pre-order."""
    yield at, drs
    for ordinal, condition in enumerate(drs.conditions):
        if isinstance(condition, Implication):
            yield from iter_boxes(condition.antecedent, at.child(ordinal, Side.ANTECEDENT))
            yield from iter_boxes(condition.consequent, at.child(ordinal, Side.CONSEQUENT))


def update_box(drs: Drs, at: DrsLocation, new_box: Drs) -> Drs:
    """Return a copy of `drs` with the box at `at` replaced by `new_box`."""
    if not at.path:
        return new_box
    step, rest = at.path[0], DrsLocation(at.path[1:])
    if not 0 <= step.condition < len(drs.conditions):
        raise LocationError(f"No condition {step.condition} in box")
    condition = drs.conditions[step.condition]
    if not isinstance(condition, Implication):
        raise LocationError(f"Condition {step.condition} is not an implication")
    if step.side is Side.ANTECEDENT:
        condition = replace(condition, antecedent=update_box(condition.antecedent, rest, new_box))
    else:
        condition = replace(condition, consequent=update_box(condition.consequent, rest, new_box))
    conditions = list(drs.conditions)
    conditions[step.condition] = condition
    return replace(drs, conditions=tuple(conditions))


def merge_drs(root: Drs, delta: Drs, at: DrsLocation = ROOT) -> Drs:
    """Append `delta`'s universe and conditions to the box at `at`.

    Pure: `root` is unchanged. Referent ids must stay unique across the tree.

    Raises:
        LocationError: if `at` addresses no box or a referent of `delta` is already used
    """
    target = root.box(at)
    if delta.is_empty:
        return root
    clashes = set(delta.referents()) & set(root.referents())
    if clashes:
        raise LocationError(f"Referents already present in the DRS: {sorted(clashes)}")
    merged = update_box(root, at, target + delta)
    logger.debug(
        f"Merged {len(delta.universe)} referents and {len(delta.conditions)} conditions at {at}"
    )
    return merged


def accessible_referents(root: Drs, at: DrsLocation) -> list[str]:
    """Referents accessible from the box at `at`, innermost first.

    A box sees its own universe, its ancestors' universes and, from a
    consequent, the universe of the antecedent it is paired with.
    """
    root.box(at)  # validates the location
    accessible: list[str] = []
    for location in at.prefixes():
        box = root.box(location)
        accessible.extend(box.universe)
        if location.path and location.path[-1].side is Side.CONSEQUENT:
            last = location.path[-1]
            antecedent = DrsLocation(location.path[:-1]).child(last.condition, Side.ANTECEDENT)
            accessible.extend(root.box(antecedent).universe)
    return accessible


def substitute(drs: Drs, mapping: Mapping[str, str]) -> Drs:
    """Replace referent ids (e.g. pronoun placeholders) in every condition."""

    def swap(ref: str) -> str:
        return mapping.get(ref, ref)

    conditions: list[Condition] = []
    for condition in drs.conditions:
        if isinstance(condition, Atom):
            conditions.append(Atom(condition.predicate, tuple(swap(a) for a in condition.args)))
        elif isinstance(condition, Equality):
            conditions.append(Equality(swap(condition.left), swap(condition.right)))
        else:
            conditions.append(
                Implication(
                    substitute(condition.antecedent, mapping),
                    substitute(condition.consequent, mapping),
                )
            )
    return Drs(drs.universe, tuple(conditions))
