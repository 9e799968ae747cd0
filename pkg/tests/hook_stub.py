"""Stub ratification hooks for testing."""

from typing import Iterable


class RecordingHook:
    """Test stub that accepts every binding and records each call."""

    def __init__(self) -> None:
        self.calls: list[tuple[str, tuple[str, ...]]] = []

    def ratify(self, binding, drs, registry, context) -> bool:
        self.calls.append((str(binding.occurrence), binding.antecedent))
        return True


class VetoHook:
    """Test stub rejecting any binding whose antecedent includes one of `vetoed`.

    Args:
        vetoed: Referent ids the hook never accepts
    """

    def __init__(self, vetoed: Iterable[str]):
        self.vetoed = set(vetoed)
        self.rejected: list[tuple[str, ...]] = []

    def ratify(self, binding, drs, registry, context) -> bool:
        if self.vetoed & set(binding.antecedent):
            self.rejected.append(binding.antecedent)
            return False
        return True
