# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Phase one: a nondeterministic LR parser exploring all actions depth-first
with backtracking.

The lookahead is a set: the CF symbols the next word may have. A reduce
applies if its lookaheads meet that set, and the intersection becomes the
lookahead of the next cycle. A shift then only takes lexemes whose symbol is
in the current set."""

import logging
from typing import FrozenSet, Iterator, List, NamedTuple, Optional, \
    Sequence, Tuple, Union

from lrug._common import DEFAULT_MAX_STEPS, StepLimitExceeded, LrugError
from lrug.a_terms import Term, Struct, rename, unify, unify_sequences
from lrug.b_grammar import GeneralizedLexeme, LexEntry, UGRule
from lrug.c_tables import ParseTables, Transition, END_MARKER
from lrug.d_runtime._10_lexer import LexedInput
from lrug.d_runtime._20_trees import Node, Leaf, Apply, GapLeaf
from lrug.d_runtime._30_gaps import Frame, GapLists, gap_step, \
    empty_production_allowed, BACK_CHECK_GAPS, BACK_CHECK_MODES

log = logging.getLogger(__name__)

GENERALIZED = "generalized"
FULL_UG = "full"
CF_SYMBOLS = "cf"
SYMBOL_MODES = (GENERALIZED, FULL_UG, CF_SYMBOLS)


class ParseOptions(NamedTuple):
    max_solutions: Optional[int] = None
    max_steps: int = DEFAULT_MAX_STEPS
    # narrow the lookahead set to the lookaheads of each reduce
    intersect: bool = True
    back_check: str = BACK_CHECK_GAPS
    # generalized rules, the UG rules themselves, or bare CF symbols
    symbols: str = GENERALIZED


class ParseStats:
    def __init__(self):
        self.steps = 0
        self.backtracks = 0
        self.solutions = 0
        self.gap_pushes = 0
        self.gap_pops = 0

    def __repr__(self):
        return f"ParseStats(steps={self.steps}, " \
               f"backtracks={self.backtracks}, " \
               f"solutions={self.solutions})"


class Configuration(NamedTuple):
    stack: Frame
    position: int
    lookahead: FrozenSet[Term]
    gaps: GapLists


class LrParser:
    def __init__(self, tables: ParseTables,
                 options: ParseOptions = ParseOptions()):
        if options.back_check not in BACK_CHECK_MODES:
            raise LrugError(f"Unknown back-check mode {options.back_check!r}")
        if options.symbols not in SYMBOL_MODES:
            raise LrugError(f"Unknown symbol mode {options.symbols!r}")
        self.tables = tables
        self.options = options
        self.stats = ParseStats()

    def parse(self, sentence: Union[str, Sequence[str]]) -> Iterator[Node]:
        """Phase-one trees in depth-first order. Unknown words raise
        `LexicalError` right away; running out of steps raises
        `StepLimitExceeded` from the iterator after the trees found so
        far."""
        self.stats = ParseStats()
        return self._search(LexedInput(self.tables, sentence))

    def _enter(self, frame: Frame, gaps: GapLists) -> Optional[GapLists]:
        if self.options.symbols == CF_SYMBOLS:
            return gaps
        new_gaps = gap_step(frame, gaps, self.tables, self.options.back_check)
        if new_gaps is not None:
            self.stats.gap_pushes += new_gaps.size - gaps.size
        return new_gaps

    def _search(self, inp: LexedInput) -> Iterator[Node]:
        opts = self.options
        bottom = Frame(0, None, None, None)
        gaps = self._enter(bottom, GapLists())
        assert gaps is not None
        agenda: List[Configuration] = [
            Configuration(bottom, 0, inp.lookahead_set(0), gaps)]
        while agenda:
            config = agenda.pop()
            self.stats.steps += 1
            if self.stats.steps > opts.max_steps:
                raise StepLimitExceeded(opts.max_steps)
            state = config.stack.state

            accepted = config.position == len(inp) \
                and END_MARKER in config.lookahead \
                and state in self.tables.accepting
            if accepted:
                node = config.stack.node
                assert node is not None
                self.stats.solutions += 1
                yield node
                if opts.max_solutions is not None \
                        and self.stats.solutions >= opts.max_solutions:
                    return

            successors = list(self._shifts(config, inp))
            successors.extend(self._reduces(config))
            if not successors and not accepted:
                self.stats.backtracks += 1
            # first action explored first
            agenda.extend(reversed(successors))

    def _shift_candidates(self, config: Configuration, inp: LexedInput) \
            -> Iterator[Tuple[GeneralizedLexeme, Optional[LexEntry], Term]]:
        for lexeme in inp.lexemes[config.position]:
            if lexeme.cf not in config.lookahead:
                continue
            if self.options.symbols == FULL_UG:
                for entry in lexeme.sources:
                    yield lexeme, entry, entry.renamed().phrase
            else:
                yield lexeme, None, rename(lexeme.phrase)

    def _shifts(self, config: Configuration, inp: LexedInput) \
            -> Iterator[Configuration]:
        if config.position >= len(inp):
            return
        row = self.tables.shifts.get(config.stack.state, {})
        word = inp.words[config.position]
        for lexeme, entry, phrase in self._shift_candidates(config, inp):
            transition = row.get(lexeme.cf)
            if transition is None:
                continue
            node = Leaf(word, config.position, lexeme, entry)
            stack_phrase = self._instantiate(phrase, transition)
            if self.options.symbols != CF_SYMBOLS and stack_phrase is None:
                continue
            frame = Frame(transition.target, node, stack_phrase, config.stack)
            gaps = self._enter(frame, config.gaps)
            if gaps is None:
                continue
            position = config.position + 1
            yield Configuration(frame, position, inp.lookahead_set(position),
                                gaps)

    def _instantiate(self, phrase: Term, transition: Transition) \
            -> Optional[Term]:
        """The phrase unified with the generalized symbol of the transition,
        or None if they clash or plain CF symbols are used."""
        if self.options.symbols == CF_SYMBOLS:
            return None
        subst = unify(phrase, rename(transition.symbol))
        if subst is None:
            return None
        return subst.apply(phrase)

    def _rule_instances(self, cf_rule: int) \
            -> Iterator[Tuple[Optional[UGRule], Term, Tuple[Term, ...]]]:
        if self.options.symbols == FULL_UG:
            for source in self.tables.backbone[cf_rule].sources:
                r = source.renamed()
                yield source, r.lhs, r.rhs
        else:
            g = self.tables.rules[cf_rule]
            renamed = rename(Struct("", (g.lhs, *g.rhs)))
            assert isinstance(renamed, Struct)
            yield None, renamed.args[0], renamed.args[1:]

    def _reduces(self, config: Configuration) -> Iterator[Configuration]:
        opts = self.options
        state = config.stack.state
        for cf_rule, lookaheads in sorted(
                self.tables.reduces.get(state, {}).items()):
            common = lookaheads & config.lookahead
            if not common:
                continue
            lookahead = common if opts.intersect else config.lookahead
            rule = self.tables.backbone[cf_rule]

            gaps = config.gaps
            if rule.is_empty and opts.symbols != CF_SYMBOLS:
                tag = rule.sources[0].gap_role.tag
                assert tag is not None
                if not empty_production_allowed(gaps, tag, rule.lhs):
                    continue
                gaps = gaps.cleared(tag)

            children: List[Node] = []
            phrases: List[Optional[Term]] = []
            frame = config.stack
            for _ in rule.rhs:
                assert frame.node is not None and frame.below is not None
                children.append(frame.node)
                phrases.append(frame.phrase)
                frame = frame.below
            children.reverse()
            phrases.reverse()
            uncovered = frame
            goto = self.tables.gotos.get(uncovered.state, {}).get(rule.lhs)
            if goto is None:
                continue

            for source, lhs, rhs in self._rule_instances(cf_rule):
                phrase = self._mother_phrase(lhs, rhs, phrases, goto)
                if opts.symbols != CF_SYMBOLS and phrase is None:
                    continue
                node: Node
                if rule.is_empty:
                    node = GapLeaf(cf_rule, source)
                else:
                    node = Apply(cf_rule, tuple(children), source)
                new_frame = Frame(goto.target, node, phrase, uncovered)
                new_gaps = self._enter(new_frame, gaps)
                if new_gaps is None:
                    continue
                if rule.is_empty and opts.symbols != CF_SYMBOLS:
                    self.stats.gap_pops += 1
                yield Configuration(new_frame, config.position, lookahead,
                                    new_gaps)

    def _mother_phrase(self, lhs: Term, rhs: Tuple[Term, ...],
                       phrases: List[Optional[Term]],
                       goto: Transition) -> Optional[Term]:
        if self.options.symbols == CF_SYMBOLS:
            return None
        known = tuple(p for p in phrases if p is not None)
        assert len(known) == len(phrases)
        subst = unify_sequences(rhs, known)
        if subst is None:
            return None
        subst = unify(lhs, rename(goto.symbol), subst)
        if subst is None:
            return None
        return subst.apply(lhs)


def parse(tables: ParseTables, sentence: Union[str, Sequence[str]],
          options: ParseOptions = ParseOptions()) -> Iterator[Node]:
    return LrParser(tables, options).parse(sentence)
