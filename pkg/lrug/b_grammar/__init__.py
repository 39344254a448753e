# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


from ._10_model import CategoryDecl, GapRole, UGRule, LexEntry, Grammar, \
    NO_GAP, ADDS_KIND, CONSUMES_KIND, map_to_cf, open_phrase
from ._20_loader import load_grammar, load_grammar_file, format_grammar
from ._30_backbone import CFRule, build_backbone, augmented_rule, \
    START_SYMBOL
from ._40_generalize import GeneralizedRule, GeneralizedLexeme, LexemeKey, \
    generalize, generalize_rule, generalize_lexicon, generalize_phrases
