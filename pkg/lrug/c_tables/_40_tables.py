# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


import logging
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, \
    Sequence, Tuple

from lrug._common import AUGMENTED_RULE, LrugError
from lrug.a_terms import Term, Struct, anti_unify_all, canonical, \
    term_key, terms_tuple_key
from lrug.b_grammar import Grammar, CFRule, GeneralizedRule, \
    GeneralizedLexeme, LexemeKey, build_backbone, generalize, \
    generalize_phrases
from lrug.c_tables._20_automaton import Automaton, State, build_automaton
from lrug.c_tables._30_lookaheads import END_MARKER, slr_lookaheads, \
    lalr_lookaheads

log = logging.getLogger(__name__)

SLR = "slr"
LALR = "lalr"
MODES = (SLR, LALR)

SHIFT = "shift"
REDUCE = "reduce"
ACCEPT = "accept"


class Action(NamedTuple):
    kind: str
    # target state of a shift, CF rule of a reduce
    arg: int = 0


class Transition(NamedTuple):
    target: int
    # generalization of the phrases that may be shifted or reduced here
    symbol: Term


Prefix = Tuple[Term, ...]


class GapObligation(NamedTuple):
    tag: str
    cf: Term
    # the obligation holds if the stack matches one of the prefixes
    prefixes: Tuple[Prefix, ...]


class CompileStats(NamedTuple):
    states: int
    transitions: int
    shift_reduce: int
    reduce_reduce: int
    filter_hits: int
    ug_check: bool


class ParseTables:
    """Immutable after construction; shared by any number of parsers."""

    def __init__(self, *,
                 grammar: Grammar,
                 mode: str,
                 backbone: Sequence[CFRule],
                 states: Sequence[State],
                 shifts: Dict[int, Dict[Term, Transition]],
                 gotos: Dict[int, Dict[Term, Transition]],
                 reduces: Dict[int, Dict[int, FrozenSet[Term]]],
                 accepting: FrozenSet[int],
                 back_check: Dict[int, Tuple[Prefix, ...]],
                 gap_add: Dict[int, Tuple[GapObligation, ...]],
                 rules: Dict[int, GeneralizedRule],
                 lexemes: Dict[LexemeKey, GeneralizedLexeme],
                 stats: CompileStats):
        if mode not in MODES:
            raise LrugError(f"Unknown table mode {mode!r}")
        self.grammar = grammar
        self.mode = mode
        self.backbone = list(backbone)
        self.states = list(states)
        self.shifts = shifts
        self.gotos = gotos
        self.reduces = reduces
        self.accepting = accepting
        self.back_check = back_check
        self.gap_add = gap_add
        self.rules = rules
        self.lexemes = lexemes
        self.stats = stats

    def __repr__(self):
        return f"ParseTables({self.mode}, {len(self.states)} states)"

    @property
    def terminals(self) -> List[Term]:
        found = {sym for row in self.shifts.values() for sym in row}
        found.update(sym for row in self.reduces.values()
                     for las in row.values() for sym in las)
        return sorted(found, key=term_key)

    def actions(self, state: int, terminal: Term) -> List[Action]:
        """Accept first, then shift, then reduces by rule number."""
        result: List[Action] = []
        if terminal == END_MARKER and state in self.accepting:
            result.append(Action(ACCEPT))
        shift = self.shifts.get(state, {}).get(terminal)
        if shift is not None:
            result.append(Action(SHIFT, shift.target))
        for rule, lookaheads in sorted(self.reduces.get(state, {}).items()):
            if terminal in lookaheads:
                result.append(Action(REDUCE, rule))
        return result

    def action_table(self) -> Dict[Tuple[int, Term], List[Action]]:
        table: Dict[Tuple[int, Term], List[Action]] = {}
        for state in self.states:
            for terminal in [*self.terminals, END_MARKER]:
                acts = self.actions(state.id, terminal)
                if acts:
                    table[(state.id, terminal)] = acts
        return table


def _unique_prefixes(prefixes: Iterable[Prefix]) -> Tuple[Prefix, ...]:
    unique: Dict[tuple, Prefix] = {}
    for p in prefixes:
        renamed = canonical(Struct("", p))
        assert isinstance(renamed, Struct)
        unique.setdefault(terms_tuple_key(p), renamed.args)
    return tuple(unique[k] for k in sorted(unique))


def _goto_symbol(state: State, symbol: Term,
                 backbone: Sequence[CFRule]) -> Term:
    """Generalization of the UG phrases after the dot that map to `symbol`,
    over all source rules of the items of the state."""
    phrases: List[Term] = []
    for item in state.items:
        rule = backbone[item.rule]
        if item.dot < len(rule.rhs) and rule.rhs[item.dot] == symbol:
            phrases.extend(u.rhs[item.dot] for u in rule.sources)
    return canonical(anti_unify_all(phrases))


def _back_check_prefixes(state: State,
                         backbone: Sequence[CFRule]) -> Tuple[Prefix, ...]:
    prefixes: List[Prefix] = []
    for item in state.kernel:
        if item.dot == 0:
            prefixes.append(())
        else:
            _, rhs = generalize_phrases(backbone[item.rule].sources,
                                        item.dot)
            prefixes.append(rhs)
    return _unique_prefixes(prefixes)


def _gap_obligations(state: State, backbone: Sequence[CFRule],
                     grammar: Grammar) -> Tuple[GapObligation, ...]:
    """An item triggers an obligation when its rule has a gap-adding source
    and the dot stands before the last phrase, the one hosting the gap."""
    groups: Dict[Tuple[str, Term], List[Prefix]] = {}
    for item in state.items:
        rule = backbone[item.rule]
        if not rule.rhs or item.dot != len(rule.rhs) - 1:
            continue
        by_key: Dict[Tuple[str, Term], list] = {}
        for u in rule.sources:
            if u.gap_role.adds:
                assert u.gap_role.tag is not None
                assert u.gap_role.phrase is not None
                key = (u.gap_role.tag, grammar.map_to_cf(u.gap_role.phrase))
                by_key.setdefault(key, []).append(u)
        for key, sources in by_key.items():
            _, prefix = generalize_phrases(sources, item.dot)
            groups.setdefault(key, []).append(prefix)
    return tuple(
        GapObligation(tag, cf, _unique_prefixes(groups[(tag, cf)]))
        for tag, cf in sorted(groups, key=lambda k: (k[0], term_key(k[1]))))


def _count_conflicts(tables: ParseTables) -> Tuple[int, int]:
    shift_reduce = reduce_reduce = 0
    for acts in tables.action_table().values():
        reduces = sum(1 for a in acts if a.kind == REDUCE)
        if reduces and any(a.kind != REDUCE for a in acts):
            shift_reduce += 1
        if reduces > 1:
            reduce_reduce += 1
    return shift_reduce, reduce_reduce


def assemble_tables(automaton: Automaton, grammar: Grammar,
                    mode: str = SLR) -> ParseTables:
    backbone = automaton.backbone
    if mode == SLR:
        slr = slr_lookaheads(backbone)
        lookaheads = {(s.id, i.rule): slr[i.rule]
                      for s in automaton.states for i in s.items
                      if i.dot == len(backbone[i.rule].rhs)}
    elif mode == LALR:
        lookaheads = lalr_lookaheads(automaton)
    else:
        raise LrugError(f"Unknown table mode {mode!r}")

    shifts: Dict[int, Dict[Term, Transition]] = {}
    gotos: Dict[int, Dict[Term, Transition]] = {}
    nonterminals = {r.lhs for r in backbone}
    for (src, symbol), dst in sorted(
            automaton.transitions.items(),
            key=lambda kv: (kv[0][0], term_key(kv[0][1]))):
        row = gotos if symbol in nonterminals else shifts
        row.setdefault(src, {})[symbol] = Transition(
            dst, _goto_symbol(automaton.states[src], symbol, backbone))

    reduces: Dict[int, Dict[int, FrozenSet[Term]]] = {}
    accepting = set()
    for (state_id, rule), las in sorted(lookaheads.items()):
        if rule == AUGMENTED_RULE:
            accepting.add(state_id)
        elif las:
            reduces.setdefault(state_id, {})[rule] = las

    gap_add: Dict[int, Tuple[GapObligation, ...]] = {}
    for state in automaton.states:
        obligations = _gap_obligations(state, backbone, grammar)
        if obligations:
            gap_add[state.id] = obligations

    rules, lexemes = generalize(grammar, backbone)
    tables = ParseTables(
        grammar=grammar,
        mode=mode,
        backbone=backbone,
        states=automaton.states,
        shifts=shifts,
        gotos=gotos,
        reduces=reduces,
        accepting=frozenset(accepting),
        back_check={s.id: _back_check_prefixes(s, backbone)
                    for s in automaton.states},
        gap_add=gap_add,
        rules=rules,
        lexemes=lexemes,
        stats=CompileStats(len(automaton.states),
                           len(automaton.transitions), 0, 0,
                           automaton.filter_hits, automaton.ug_check))
    shift_reduce, reduce_reduce = _count_conflicts(tables)
    tables.stats = tables.stats._replace(shift_reduce=shift_reduce,
                                         reduce_reduce=reduce_reduce)
    log.info("%s tables: %d states, %d shift/reduce and %d reduce/reduce "
             "conflicts", mode.upper(), len(tables.states), shift_reduce,
             reduce_reduce)
    return tables


def compile_tables(grammar: Grammar, mode: str = SLR,
                   ug_check: bool = True,
                   backbone: Optional[Sequence[CFRule]] = None) \
        -> ParseTables:
    if backbone is None:
        backbone = build_backbone(grammar)
    automaton = build_automaton(grammar, backbone, ug_check)
    return assemble_tables(automaton, grammar, mode)
