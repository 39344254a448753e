# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Context-free backbone of a unification grammar."""

import logging
from typing import Dict, List, NamedTuple, Tuple

from lrug._common import AUGMENTED_RULE, START_SYMBOL_NAME, START_RULE_ID
from lrug.a_terms import Term, atom
from lrug.b_grammar._10_model import Grammar, UGRule

log = logging.getLogger(__name__)


class CFRule(NamedTuple):
    id: int
    lhs: Term
    rhs: Tuple[Term, ...]
    # UG rules mapping to this rule, in grammar order
    sources: Tuple[UGRule, ...]

    @property
    def source_ids(self) -> Tuple[str, ...]:
        return tuple(r.id for r in self.sources)

    @property
    def is_empty(self) -> bool:
        return not self.rhs


START_SYMBOL = atom(START_SYMBOL_NAME)


def augmented_rule(grammar: Grammar) -> UGRule:
    return UGRule(START_RULE_ID, START_SYMBOL, (grammar.top_phrase(),))


def cf_image(rule: UGRule, grammar: Grammar) -> Tuple[Term, Tuple[Term, ...]]:
    if rule.id == START_RULE_ID and rule.lhs == START_SYMBOL:
        return START_SYMBOL, (atom(grammar.top),)
    return grammar.map_to_cf(rule.lhs), \
        tuple(grammar.map_to_cf(p) for p in rule.rhs)


def build_backbone(grammar: Grammar) -> List[CFRule]:
    """One CF rule per distinct CF image of the UG rules. Rule zero is the
    augmented `$start -> top`; the others are numbered by the first grammar
    rule having their image."""
    images: Dict[Tuple[Term, Tuple[Term, ...]], List[UGRule]] = {}
    start = augmented_rule(grammar)
    images[cf_image(start, grammar)] = [start]
    for rule in grammar.rules:
        images.setdefault(cf_image(rule, grammar), []).append(rule)
    result = [CFRule(num, lhs, rhs, tuple(sources))
              for num, ((lhs, rhs), sources) in enumerate(images.items())]
    assert result[AUGMENTED_RULE].sources == (start,)
    log.debug("Backbone: %d CF rules from %d UG rules",
              len(result), len(grammar.rules))
    return result
