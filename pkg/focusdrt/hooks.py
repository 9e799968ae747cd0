"""Ratification hooks: the last word on a proposed binding."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Callable, Iterable, Protocol

from .constants import ANIMATE_AGENT_PREDICATES, DEFAULT_HOOK
from .models import Animacy, Role

if TYPE_CHECKING:
    from .builder import ReferentRegistry
    from .drs import Drs
    from .resolver import Binding, PronounContext

logger = logging.getLogger(__name__)


class RatificationHook(Protocol):
    """Protocol for world-knowledge checks on bindings.

    Hooks run after agreement and accessibility have passed and must be free
    of side effects; returning False sends the resolver to the next candidate.
    """

    def ratify(
        self,
        binding: Binding,
        drs: Drs,
        registry: ReferentRegistry,
        context: PronounContext,
    ) -> bool:
        """Return True to accept `binding`."""
        ...


class AcceptAllHook:
    """Accepts every binding; world knowledge is out of reach."""

    def ratify(self, binding, drs, registry, context) -> bool:
        return True


class RejectAllHook:
    """Rejects every binding, leaving all anaphors unresolved."""

    def ratify(self, binding, drs, registry, context) -> bool:
        logger.debug(f"Rejecting {binding.antecedent} for {binding.occurrence}")
        return False


class AnimateAgentHook:
    """Rejects inanimate antecedents for the agent of selected predicates.

    Something that reads has to be animate; "o livro" cannot be the subject
    of "ler".
    """

    def __init__(self, predicates: Iterable[str] = ANIMATE_AGENT_PREDICATES):
        self.predicates = frozenset(predicates)

    def ratify(self, binding, drs, registry, context) -> bool:
        if context.role is not Role.AG or context.predicate not in self.predicates:
            return True
        for ref_id in binding.antecedent:
            if registry.get(ref_id).features.animacy is Animacy.INANIMATE:
                logger.debug(
                    f"{ref_id} is inanimate and cannot be the agent of {context.predicate}"
                )
                return False
        return True


HOOKS: dict[str, Callable[[], RatificationHook]] = {
    "accept": AcceptAllHook,
    "reject-all": RejectAllHook,
    "animate-agent": AnimateAgentHook,
}


def get_hook(name: str = DEFAULT_HOOK) -> RatificationHook:
    """Instantiate the bundled hook called `name`."""
    try:
        factory = HOOKS[name]
    except KeyError:
        choices = ", ".join(sorted(HOOKS))
        raise ValueError(f"Unknown ratification hook {name!r}; choose from {choices}") from None
    return factory()
