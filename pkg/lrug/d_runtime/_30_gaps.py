# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Parser stack, gap lists and back-checking.

A gap list records the CF symbols of phrases that have been moved to the
left and not yet found their empty production. An empty production may only
apply when the top of its list is its own symbol, and it empties the list."""

import logging
from typing import List, NamedTuple, Optional, Sequence, Tuple

from lrug.a_terms import Term, Struct, rename, unify_sequences
from lrug.c_tables import ParseTables, Prefix
from lrug.d_runtime._20_trees import Node

log = logging.getLogger(__name__)

BACK_CHECK_ALL = "all"
BACK_CHECK_GAPS = "gaps"
BACK_CHECK_OFF = "off"
BACK_CHECK_MODES = (BACK_CHECK_ALL, BACK_CHECK_GAPS, BACK_CHECK_OFF)


class Frame(NamedTuple):
    """One stack cell: the state entered after `node` was pushed. The
    bottom frame holds State 0 and nothing else."""
    state: int
    node: Optional[Node]
    # the phrase of the node; None when parsing with plain CF symbols
    phrase: Optional[Term]
    below: Optional['Frame']


class GapLists(NamedTuple):
    maxproj: Tuple[Term, ...] = ()
    verb: Tuple[Term, ...] = ()

    def get(self, tag: str) -> Tuple[Term, ...]:
        return getattr(self, tag)

    def top(self, tag: str) -> Optional[Term]:
        items = self.get(tag)
        return items[-1] if items else None

    def pushed(self, tag: str, symbol: Term) -> 'GapLists':
        return self._replace(**{tag: self.get(tag) + (symbol,)})

    def cleared(self, tag: str) -> 'GapLists':
        return self._replace(**{tag: ()})

    @property
    def size(self) -> int:
        return len(self.maxproj) + len(self.verb)


def top_phrases(stack: Frame, count: int) -> Optional[List[Optional[Term]]]:
    """Phrases of the `count` topmost nodes, deepest first. None if the
    stack holds fewer nodes."""
    result: List[Optional[Term]] = []
    frame = stack
    while len(result) < count:
        below = frame.below
        if below is None:
            return None
        result.append(frame.phrase)
        frame = below
    result.reverse()
    return result


def matches_prefix(prefixes: Sequence[Prefix], stack: Frame) -> bool:
    """Whether some prefix unifies element-wise with the top of the stack.
    Prefixes are renamed apart from the stack phrases."""
    for prefix in prefixes:
        phrases = top_phrases(stack, len(prefix))
        if phrases is None:
            continue
        known = tuple(p for p in phrases if p is not None)
        if len(known) < len(phrases):
            # plain CF symbols carry no constraints
            return True
        renamed = rename(Struct("", prefix))
        assert isinstance(renamed, Struct)
        if unify_sequences(renamed.args, known) is not None:
            return True
    return False


def back_check(state: int, stack: Frame, tables: ParseTables) -> bool:
    """Matches the kernel prefixes of `state` against the stack."""
    return matches_prefix(tables.back_check.get(state, ()), stack)


def gap_step(stack: Frame, gaps: GapLists, tables: ParseTables,
             mode: str = BACK_CHECK_GAPS) -> Optional[GapLists]:
    """Gap lists after entering the state on top of `stack`, or None if
    back-checking every state is on and the stack fails it.

    Each gap obligation of the state pushes its symbol, unless back-checking
    is on and none of the obligation's prefixes matches the stack."""
    if mode == BACK_CHECK_ALL and not back_check(stack.state, stack, tables):
        return None
    for obligation in tables.gap_add.get(stack.state, ()):
        if mode == BACK_CHECK_OFF \
                or matches_prefix(obligation.prefixes, stack):
            gaps = gaps.pushed(obligation.tag, obligation.cf)
        else:
            log.debug("Gap %s on %s refused by back-check in state %d",
                      obligation.cf, obligation.tag, stack.state)
    return gaps


def empty_production_allowed(gaps: GapLists, tag: str, symbol: Term) -> bool:
    return gaps.top(tag) == symbol
