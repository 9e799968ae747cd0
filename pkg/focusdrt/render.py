"""Text output: DRS boxes, canonical DRS JSON, focus traces and binding listings."""

import json
import logging
from typing import Any, Optional

from .drs import Atom, Drs, Equality, Implication
from .focus import FocusState
from .resolver import AnyBinding, Resolution

logger = logging.getLogger(__name__)

RENDER_MODES = ("ascii", "json")
ARROW = " => "


def _box_lines(drs: Drs) -> list[str]:
    """Draw one box, implications included, as equal-width lines."""
    body: list[str] = []
    for condition in drs.conditions:
        if isinstance(condition, Implication):
            body.extend(_implication_lines(condition))
        else:
            body.append(str(condition))

    header = " ".join(drs.universe)
    width = max([len(header), *(len(line) for line in body)])
    lines = ["+" + "-" * (width + 2) + "+", f"| {header.ljust(width)} |"]
    lines.append("|" + "-" * (width + 2) + "|")
    lines.extend(f"| {line.ljust(width)} |" for line in body)
    lines.append(lines[0])
    return lines


def _implication_lines(implication: Implication) -> list[str]:
    left = _box_lines(implication.antecedent)
    right = _box_lines(implication.consequent)
    height = max(len(left), len(right))
    left_width, right_width = len(left[0]), len(right[0])
    left += [" " * left_width] * (height - len(left))
    right += [" " * right_width] * (height - len(right))
    middle = height // 2
    return [
        left[row] + (ARROW if row == middle else " " * len(ARROW)) + right[row]
        for row in range(height)
    ]


def drs_to_dict(drs: Drs) -> dict[str, Any]:
    """Canonical serialization of a box."""
    conditions: list[dict[str, Any]] = []
    for condition in drs.conditions:
        if isinstance(condition, Atom):
            conditions.append(
                {"type": "atom", "predicate": condition.predicate, "args": list(condition.args)}
            )
        elif isinstance(condition, Equality):
            conditions.append(
                {"type": "equality", "left": condition.left, "right": condition.right}
            )
        else:
            conditions.append(
                {
                    "type": "implication",
                    "antecedent": drs_to_dict(condition.antecedent),
                    "consequent": drs_to_dict(condition.consequent),
                }
            )
    return {"universe": list(drs.universe), "conditions": conditions}


def render_drs(drs: Drs, mode: str = "ascii") -> str:
    """Render `drs` as ASCII boxes or as canonical JSON.

    Args:
        drs: The box to render
        mode: `ascii`, `json`, or `structured` (an alias for `json`)

    Returns:
        The rendering, ending with a newline

    Raises:
        ValueError: for an unknown mode
    """
    if mode == "ascii":
        return "\n".join(_box_lines(drs)) + "\n"
    if mode in ("json", "structured"):
        return json.dumps(drs_to_dict(drs), ensure_ascii=False, indent=2) + "\n"
    raise ValueError(f"Unknown render mode {mode!r}; choose from {RENDER_MODES}")


def _antecedent(binding: AnyBinding) -> Optional[Any]:
    if not binding.resolved:
        return None
    if len(binding.antecedent) == 1:
        return binding.antecedent[0]
    return list(binding.antecedent)


def binding_to_dict(binding: AnyBinding) -> dict[str, Any]:
    return {
        "occurrence": str(binding.occurrence),
        "antecedent": _antecedent(binding),
        "rule": binding.rule,
        "rank_tried": binding.rank_tried,
    }


def state_to_dict(index: int, state: FocusState) -> dict[str, Any]:
    return {
        "index": index,
        "af": state.af,
        "pafl": list(state.pafl),
        "afs": list(state.afs),
        "df": state.df,
        "pdfl": list(state.pdfl),
        "dfs": list(state.dfs),
    }


def trace_to_jsonl(resolution: Resolution) -> str:
    """One JSON object per sentence: the focus stores after it and the bindings made in it."""
    lines = []
    for step in resolution.trace:
        record = state_to_dict(step.index, step.state)
        record["bindings"] = [binding_to_dict(b) for b in step.bindings]
        lines.append(json.dumps(record, ensure_ascii=False))
    return "".join(f"{line}\n" for line in lines)


def format_binding(binding: AnyBinding) -> str:
    if binding.resolved:
        target = "+".join(binding.antecedent)
    else:
        target = "unresolved"
    return f"{binding.occurrence} -> {target} [{binding.rule}, {binding.rank_tried}]"


def format_bindings(resolution: Resolution) -> str:
    """One `occurrence -> antecedent [rule, rank]` line per anaphor."""
    return "".join(f"{format_binding(b)}\n" for b in resolution.bindings)
