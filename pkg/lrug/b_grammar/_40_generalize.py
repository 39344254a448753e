# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Generalized grammar: every CF rule and every (word, CF symbol) pair gets
the least general term subsuming all the UG rules or lexical entries that map
to it."""

from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from lrug.a_terms import Term, Struct, anti_unify_all
from lrug.b_grammar._10_model import Grammar, LexEntry, UGRule
from lrug.b_grammar._30_backbone import CFRule, build_backbone


class GeneralizedRule(NamedTuple):
    cf_rule: int
    lhs: Term
    rhs: Tuple[Term, ...]
    # true if the CF rule has a single source: the rule is then the source
    exact: bool


class GeneralizedLexeme(NamedTuple):
    word: str
    cf: Term
    phrase: Term
    sources: Tuple[LexEntry, ...]

    @property
    def exact(self) -> bool:
        return len(self.sources) == 1


LexemeKey = Tuple[str, Term]


def _syntax_term(lhs: Term, rhs: Sequence[Term]) -> Struct:
    return Struct("rule", (lhs, Struct("rhs", tuple(rhs))))


def generalize_phrases(rules: Sequence[UGRule],
                       prefix_len: Optional[int] = None) \
        -> Tuple[Term, Tuple[Term, ...]]:
    """Generalizes the rules as whole terms, so that a variable shared by the
    left and right side of every rule stays shared. With `prefix_len`, only
    the first RHS phrases take part."""
    if prefix_len is None:
        terms = [_syntax_term(r.lhs, r.rhs) for r in rules]
    else:
        terms = [_syntax_term(r.lhs, r.rhs[:prefix_len]) for r in rules]
    general = anti_unify_all(terms)
    assert isinstance(general, Struct)
    lhs, rhs = general.args
    assert isinstance(rhs, Struct)
    return lhs, rhs.args


def generalize_rule(cf_rule: CFRule) -> GeneralizedRule:
    lhs, rhs = generalize_phrases(cf_rule.sources)
    return GeneralizedRule(cf_rule.id, lhs, rhs, len(cf_rule.sources) == 1)


def generalize_lexicon(grammar: Grammar) -> Dict[LexemeKey, GeneralizedLexeme]:
    groups: Dict[LexemeKey, List[LexEntry]] = {}
    for entry in grammar.lexicon:
        key = (entry.word, grammar.map_to_cf(entry.phrase))
        groups.setdefault(key, []).append(entry)
    return {
        key: GeneralizedLexeme(
            key[0], key[1], anti_unify_all(e.phrase for e in entries),
            tuple(entries))
        for key, entries in groups.items()}


def generalize(grammar: Grammar,
               backbone: Optional[Sequence[CFRule]] = None) \
        -> Tuple[Dict[int, GeneralizedRule],
                 Dict[LexemeKey, GeneralizedLexeme]]:
    if backbone is None:
        backbone = build_backbone(grammar)
    rules = {r.id: generalize_rule(r) for r in backbone}
    return rules, generalize_lexicon(grammar)
