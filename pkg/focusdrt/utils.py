"""Surface-order traversal of annotated sentences."""

from dataclasses import dataclass
from typing import Iterator, Optional

from .models import Clause, NounPhrase, NPPath, Role, Sentence


@dataclass(frozen=True)
class ClauseFrame:
    """A clause together with its place in the sentence's relative-clause nesting."""

    clause: Clause
    depth: int
    head: Optional[NPPath] = None  # noun phrase the relative clause modifies
    parent: Optional["ClauseFrame"] = None

    def lineage(self) -> list["ClauseFrame"]:
        """Enclosing frames from the main clause down to (excluding) this one."""
        frames = []
        frame = self.parent
        while frame is not None:
            frames.append(frame)
            frame = frame.parent
        return list(reversed(frames))


@dataclass(frozen=True)
class Mention:
    """A noun phrase occurrence, numbered in surface order within its sentence."""

    path: NPPath
    np: NounPhrase
    role: Role
    frame: ClauseFrame
    position: int

    @property
    def depth(self) -> int:
        return self.frame.depth

    @property
    def clause(self) -> Clause:
        return self.frame.clause


def iter_frames(sentence: Sentence) -> Iterator[ClauseFrame]:
    """Yield the sentence's clause frames, main clause first, depth-first."""

    def walk(frame: ClauseFrame) -> Iterator[ClauseFrame]:
        yield frame
        for ordinal, relative in frame.clause.relatives():
            head = NPPath(sentence.index, frame.clause.id, ordinal)
            yield from walk(ClauseFrame(relative, frame.depth + 1, head, frame))

    yield from walk(ClauseFrame(sentence.main, 0))


def mentions(sentence: Sentence) -> list[Mention]:
    """List every noun phrase of the sentence in surface order.

    A relative clause's material follows its head noun phrase immediately.
    """
    found: list[Mention] = []

    def walk(frame: ClauseFrame) -> None:
        for ordinal, arg in enumerate(frame.clause.args):
            path = NPPath(sentence.index, frame.clause.id, ordinal)
            found.append(Mention(path, arg.np, arg.role, frame, len(found)))
            if arg.np.relative is not None:
                walk(ClauseFrame(arg.np.relative, frame.depth + 1, path, frame))

    walk(ClauseFrame(sentence.main, 0))
    return found
