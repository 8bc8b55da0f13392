"""Action strings: ordered, possibly repeating tuples of integer action ids."""

from __future__ import annotations

from typing import Iterable

ActionSeq = tuple[int, ...]

EMPTY: ActionSeq = ()


def as_string(items: Iterable[int]) -> ActionSeq:
    """Coerce an iterable of action ids to a canonical string."""
    return tuple(int(a) for a in items)


def concat(a: ActionSeq, b: ActionSeq) -> ActionSeq:
    """Concatenate two strings; the empty string is a two-sided identity."""
    return tuple(a) + tuple(b)


def is_prefix(a: ActionSeq, b: ActionSeq) -> bool:
    """True iff b equals a followed by some (possibly empty) tail."""
    a, b = tuple(a), tuple(b)
    return len(a) <= len(b) and b[: len(a)] == a
