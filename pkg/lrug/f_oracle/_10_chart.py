# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Brute-force bottom-up chart parser with full unification at every step.

Slow on purpose and independent of the LR machinery: it is the reference
the LR pipeline is tested against. Gaps are not handled by gap lists here;
a grammar licenses them only through its own features."""

import logging
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence, \
    Tuple, Union

from lrug.a_terms import Term, Struct, canonical, rename, unify, term_key
from lrug.b_grammar import Grammar, LexEntry, UGRule
from lrug.d_runtime import split_sentence

log = logging.getLogger(__name__)


class DerivLeaf(NamedTuple):
    entry: LexEntry


class DerivNode(NamedTuple):
    rule: UGRule
    children: Tuple['Derivation', ...]


Derivation = Union[DerivLeaf, DerivNode]


class Edge(NamedTuple):
    start: int
    end: int
    phrase: Term
    derivation: Derivation
    size: int
    has_empty: bool
    # (rule, start, end) of the unary applications ending in this edge
    chain: FrozenSet[Tuple[str, int, int]]


class OracleResult(NamedTuple):
    derivations: List[Tuple[Derivation, Term]]
    # some derivation was cut by the size bound or a unary cycle
    incomplete: bool


def format_derivation(d: Derivation, grammar: Grammar) -> str:
    if isinstance(d, DerivLeaf):
        return grammar.entry_label(d.entry)
    if not d.children:
        return f"({d.rule.id})"
    children = " ".join(format_derivation(c, grammar) for c in d.children)
    return f"({d.rule.id} {children})"


class _Chart:
    def __init__(self, grammar: Grammar, words: List[str], bound: int):
        self.grammar = grammar
        self.words = words
        self.bound = bound
        self.edges: Dict[tuple, Edge] = {}
        self.by_start: Dict[int, List[Edge]] = {}
        self.agenda: List[Edge] = []
        self.incomplete = False

    def add(self, edge: Edge):
        key = (edge.start, edge.end,
               format_derivation(edge.derivation, self.grammar))
        if key not in self.edges:
            self.edges[key] = edge
            self.by_start.setdefault(edge.start, []).append(edge)
            self.agenda.append(edge)

    def sequences(self, start: int, count: int) -> List[List[Edge]]:
        """All chains of `count` adjacent edges beginning at `start`."""
        if count == 0:
            return [[]]
        result: List[List[Edge]] = []
        for first in list(self.by_start.get(start, ())):
            for rest in self.sequences(first.end, count - 1):
                result.append([first, *rest])
        return result

    def apply(self, rule: UGRule, children: Sequence[Edge], start: int):
        r = rule.renamed()
        subst = None
        for child, phrase in zip(children, r.rhs):
            subst = unify(rename(child.phrase), phrase, subst)
            if subst is None:
                return
        end = children[-1].end if children else start
        size = 1 + sum(c.size for c in children)
        has_empty = not children or any(c.has_empty for c in children)
        if len(children) == 1:
            link = (rule.id, start, end)
            if link in children[0].chain:
                self.incomplete = True
                return
            chain = children[0].chain | {link}
        else:
            chain = frozenset()
        if has_empty and size > self.bound:
            self.incomplete = True
            return
        phrase = r.lhs if subst is None else subst.apply(r.lhs)
        self.add(Edge(start, end, canonical(phrase),
                      DerivNode(rule, tuple(c.derivation for c in children)),
                      size, has_empty, chain))

    def run(self):
        for i, word in enumerate(self.words):
            for entry in self.grammar.entries_by_word.get(word, ()):
                self.add(Edge(i, i + 1, canonical(entry.phrase),
                              DerivLeaf(entry), 1, False, frozenset()))
        empty_rules = [r for r in self.grammar.rules if not r.rhs]
        for i in range(len(self.words) + 1):
            for rule in empty_rules:
                self.apply(rule, (), i)
        while self.agenda:
            edge = self.agenda.pop()
            for rule in self.grammar.rules:
                for pos, phrase in enumerate(rule.rhs):
                    assert isinstance(phrase, Struct)
                    assert isinstance(edge.phrase, Struct)
                    if phrase.functor != edge.phrase.functor:
                        continue
                    self._around(rule, pos, edge)

    def _around(self, rule: UGRule, pos: int, edge: Edge):
        # the edge at `pos`, everything else from the chart
        for left_start in range(edge.start + 1):
            for left in self.sequences(left_start, pos):
                if (left[-1].end if left else left_start) != edge.start:
                    continue
                rest = len(rule.rhs) - pos - 1
                for right in self.sequences(edge.end, rest):
                    self.apply(rule, [*left, edge, *right], left_start)


def chart_parse(grammar: Grammar, sentence: Union[str, Sequence[str]],
                bound: Optional[int] = None) -> OracleResult:
    """All derivations of the top category over the whole sentence, with
    the root phrase of each. Derivations using empty productions are only
    built up to `bound` nodes (by default four per word)."""
    words = split_sentence(sentence)
    if bound is None:
        bound = 4 * max(len(words), 1)
    chart = _Chart(grammar, words, bound)
    chart.run()
    found = [(e.derivation, e.phrase) for e in chart.edges.values()
             if e.start == 0 and e.end == len(words)
             and isinstance(e.phrase, Struct)
             and e.phrase.functor == grammar.top]
    found.sort(key=lambda d: (format_derivation(d[0], grammar),
                              term_key(d[1])))
    if chart.incomplete:
        log.warning("Chart cut by the derivation bound %d: the result may "
                    "be incomplete", bound)
    return OracleResult(found, chart.incomplete)
