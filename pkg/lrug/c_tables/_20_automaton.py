# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


import logging
from collections import deque
from typing import Deque, Dict, List, NamedTuple, Optional, Sequence, Tuple

from lrug._common import AUGMENTED_RULE
from lrug.a_terms import Term, term_key
from lrug.b_grammar import Grammar, CFRule
from lrug.c_tables._10_items import Item, ItemSet, Closure, item_set

log = logging.getLogger(__name__)


class State(NamedTuple):
    id: int
    kernel: ItemSet
    # kernel and non-kernel items
    items: ItemSet

    @property
    def non_kernel(self) -> ItemSet:
        return tuple(i for i in self.items if i not in self.kernel)


class Automaton(NamedTuple):
    states: List[State]
    transitions: Dict[Tuple[int, Term], int]
    backbone: Sequence[CFRule]
    filter_hits: int
    ug_check: bool


def build_automaton(grammar: Grammar,
                    backbone: Optional[Sequence[CFRule]] = None,
                    ug_check: bool = True) -> Automaton:
    """States are numbered in breadth-first order from State 0, the
    successors of a state in the order of their symbols."""
    cl = Closure(grammar, backbone, ug_check)
    start_kernel = item_set([Item(AUGMENTED_RULE, 0)])
    states = [State(0, start_kernel, cl.closure(start_kernel))]
    by_kernel: Dict[ItemSet, int] = {start_kernel: 0}
    transitions: Dict[Tuple[int, Term], int] = {}
    queue: Deque[int] = deque([0])
    while queue:
        src = states[queue.popleft()]
        advanced: Dict[Term, List[Item]] = {}
        for item in src.items:
            symbol = cl.next_symbol(item)
            if symbol is not None:
                advanced.setdefault(symbol, []).append(
                    Item(item.rule, item.dot + 1))
        for symbol in sorted(advanced, key=term_key):
            kernel = item_set(advanced[symbol])
            dst = by_kernel.get(kernel)
            if dst is None:
                dst = len(states)
                by_kernel[kernel] = dst
                states.append(State(dst, kernel, cl.closure(kernel)))
                queue.append(dst)
            transitions[(src.id, symbol)] = dst
    log.info("LR(0) automaton: %d states, %d transitions, %d predictions "
             "refused by UG check", len(states), len(transitions),
             cl.filter_hits)
    return Automaton(states, transitions, cl.backbone, cl.filter_hits,
                     ug_check)
