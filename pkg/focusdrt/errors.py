"""Exceptions raised by focusdrt."""

from typing import Iterable


class FocusDrtError(Exception):
    """Base class for all focusdrt errors."""


class ParseError(FocusDrtError):
    """Input could not be turned into a valid discourse (or gold corpus).

    Every problem found is kept, so a single run reports all of them.
    """

    def __init__(self, message: str, problems: Iterable[str] = ()):
        self.message = message
        self.problems = tuple(problems)
        super().__init__(str(self))

    def __str__(self) -> str:
        if not self.problems:
            return self.message
        lines = [self.message] + [f"  - {problem}" for problem in self.problems]
        return "\n".join(lines)


class ConstructionFault(FocusDrtError):
    """The DRS could not be built or extended."""


class LocationError(ConstructionFault):
    """A DRS location does not address an existing box."""
