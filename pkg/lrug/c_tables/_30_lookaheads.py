# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Reduce lookaheads. SLR takes everything that may follow the left-hand
symbol anywhere; LALR only what may follow it given the state."""

from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from lrug._common import AUGMENTED_RULE, END_MARKER_NAME
from lrug.a_terms import Term, atom
from lrug.b_grammar import CFRule
from lrug.c_tables._10_items import Item
from lrug.c_tables._20_automaton import Automaton

END_MARKER = atom(END_MARKER_NAME)


class FirstSets:
    """FIRST sets and nullability of the backbone symbols."""

    def __init__(self, backbone: Sequence[CFRule]):
        self.backbone = backbone
        self.nonterminals: Set[Term] = {r.lhs for r in backbone}
        self.nullable: Set[Term] = set()
        self.first: Dict[Term, Set[Term]] = {
            nt: set() for nt in self.nonterminals}
        changed = True
        while changed:
            changed = False
            for rule in backbone:
                seq_first, seq_nullable = self.of_sequence(rule.rhs)
                target = self.first[rule.lhs]
                if not seq_first <= target:
                    target |= seq_first
                    changed = True
                if seq_nullable and rule.lhs not in self.nullable:
                    self.nullable.add(rule.lhs)
                    changed = True

    def is_terminal(self, symbol: Term) -> bool:
        return symbol not in self.nonterminals

    def of_sequence(self, symbols: Sequence[Term]) \
            -> Tuple[Set[Term], bool]:
        """FIRST of the sequence, and whether it derives the empty string."""
        result: Set[Term] = set()
        for sym in symbols:
            if self.is_terminal(sym):
                result.add(sym)
                return result, False
            result |= self.first[sym]
            if sym not in self.nullable:
                return result, False
        return result, True


def follow_sets(backbone: Sequence[CFRule]) -> Dict[Term, FrozenSet[Term]]:
    fs = FirstSets(backbone)
    follow: Dict[Term, Set[Term]] = {nt: set() for nt in fs.nonterminals}
    follow[backbone[AUGMENTED_RULE].lhs].add(END_MARKER)
    changed = True
    while changed:
        changed = False
        for rule in backbone:
            for i, sym in enumerate(rule.rhs):
                if fs.is_terminal(sym):
                    continue
                rest_first, rest_nullable = fs.of_sequence(rule.rhs[i + 1:])
                new = set(rest_first)
                if rest_nullable:
                    new |= follow[rule.lhs]
                if not new <= follow[sym]:
                    follow[sym] |= new
                    changed = True
    return {nt: frozenset(s) for nt, s in follow.items()}


def slr_lookaheads(backbone: Sequence[CFRule]) -> Dict[int, FrozenSet[Term]]:
    follow = follow_sets(backbone)
    return {r.id: follow[r.lhs] for r in backbone}


StateItem = Tuple[int, Item]


def lalr_lookaheads(automaton: Automaton) \
        -> Dict[Tuple[int, int], FrozenSet[Term]]:
    """Lookaheads of the complete items, keyed by (state, CF rule).

    Lookaheads of every item of every state are propagated to a fixpoint:
    along transitions to the advanced item, and to the items predicted by
    closure, which get what may follow the symbol after the dot. Only items
    present in the closure get lookaheads, so the UG-filtered predictions are
    respected."""
    backbone = automaton.backbone
    fs = FirstSets(backbone)
    members = [set(s.items) for s in automaton.states]
    la: Dict[StateItem, Set[Term]] = {
        (0, Item(AUGMENTED_RULE, 0)): {END_MARKER}}
    agenda: List[StateItem] = [(0, Item(AUGMENTED_RULE, 0))]

    def add(key: StateItem, symbols: Set[Term]):
        current = la.setdefault(key, set())
        if not symbols <= current:
            current |= symbols
            agenda.append(key)

    # predicted items get spontaneous lookaheads even when the predicting
    # item has none yet
    for state in automaton.states:
        for item in state.items:
            rhs = backbone[item.rule].rhs
            if item.dot < len(rhs) and not fs.is_terminal(rhs[item.dot]):
                first, _ = fs.of_sequence(rhs[item.dot + 1:])
                if first:
                    for other in state.items:
                        if other.dot == 0 \
                                and backbone[other.rule].lhs == rhs[item.dot]:
                            add((state.id, other), first)

    while agenda:
        state_id, item = agenda.pop()
        symbols = la[(state_id, item)]
        rhs = backbone[item.rule].rhs
        if item.dot == len(rhs):
            continue
        symbol = rhs[item.dot]
        target = automaton.transitions[(state_id, symbol)]
        add((target, Item(item.rule, item.dot + 1)), symbols)
        if fs.is_terminal(symbol):
            continue
        _, rest_nullable = fs.of_sequence(rhs[item.dot + 1:])
        if not rest_nullable:
            continue
        for other in members[state_id]:
            if other.dot == 0 and backbone[other.rule].lhs == symbol:
                add((state_id, other), symbols)

    result: Dict[Tuple[int, int], FrozenSet[Term]] = {}
    for state in automaton.states:
        for item in state.items:
            if item.dot == len(backbone[item.rule].rhs):
                result[(state.id, item.rule)] = frozenset(
                    la.get((state.id, item), ()))
    return result
