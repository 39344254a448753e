# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Dotted items and the closure of item sets.

Items are never instantiated: a non-kernel item is added as the plain CF
rule with the dot at zero, but only if the unification grammar admits the
prediction. That keeps the number of items finite."""

from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, \
    Set, Tuple

from lrug.a_terms import Term, rename, unify
from lrug.b_grammar import Grammar, CFRule, build_backbone


class Item(NamedTuple):
    rule: int
    dot: int


ItemSet = Tuple[Item, ...]


def item_set(items: Iterable[Item]) -> ItemSet:
    """Sorted, without duplicates."""
    return tuple(sorted(set(items)))


class Closure:
    """Closure over one backbone. Answers of `check_ug_rules` are memoized,
    since the same pairs of rules are compared for many states."""

    def __init__(self, grammar: Grammar,
                 backbone: Optional[Sequence[CFRule]] = None,
                 ug_check: bool = True):
        self.grammar = grammar
        self.backbone: Sequence[CFRule] = backbone \
            if backbone is not None else build_backbone(grammar)
        self.ug_check = ug_check
        self.rules_by_lhs: Dict[Term, List[CFRule]] = {}
        for r in self.backbone:
            self.rules_by_lhs.setdefault(r.lhs, []).append(r)
        self._checked: Dict[Tuple[int, int, int], bool] = {}
        # non-kernel items the UG check refused, summed over all closures
        self.filter_hits = 0

    def next_symbol(self, item: Item) -> Optional[Term]:
        rhs = self.backbone[item.rule].rhs
        return rhs[item.dot] if item.dot < len(rhs) else None

    def is_complete(self, item: Item) -> bool:
        return item.dot == len(self.backbone[item.rule].rhs)

    def check_ug_rules(self, r1: int, r2: int, dot: int) -> bool:
        """Whether the phrase after the dot in some UG rule of `r1` unifies
        with the left side of some UG rule of `r2`."""
        key = (r1, r2, dot)
        known = self._checked.get(key)
        if known is not None:
            return known
        result = any(
            unify(rename(u1.rhs[dot]), rename(u2.lhs)) is not None
            for u1 in self.backbone[r1].sources
            for u2 in self.backbone[r2].sources)
        self._checked[key] = result
        return result

    def closure(self, seed: Iterable[Item]) -> ItemSet:
        result: Set[Item] = set(seed)
        agenda = list(result)
        while agenda:
            item = agenda.pop()
            symbol = self.next_symbol(item)
            if symbol is None:
                continue
            for r2 in self.rules_by_lhs.get(symbol, ()):
                new = Item(r2.id, 0)
                if new in result:
                    continue
                if self.ug_check \
                        and not self.check_ug_rules(item.rule, r2.id,
                                                    item.dot):
                    self.filter_hits += 1
                    continue
                result.add(new)
                agenda.append(new)
        return item_set(result)


def closure(seed: Iterable[Item], grammar: Grammar) -> ItemSet:
    return Closure(grammar).closure(seed)


def check_ug_rules(r1: int, r2: int, dot: int, grammar: Grammar) -> bool:
    return Closure(grammar).check_ug_rules(r1, r2, dot)
