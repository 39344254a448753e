# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


from ._10_lexer import LexedInput, lex_all, split_sentence
from ._20_trees import Node, Leaf, Apply, GapLeaf, format_tree, fold_tree, \
    iter_nodes, count_gaps
from ._30_gaps import Frame, GapLists, back_check, gap_step, \
    matches_prefix, empty_production_allowed, BACK_CHECK_ALL, \
    BACK_CHECK_GAPS, BACK_CHECK_OFF, BACK_CHECK_MODES
from ._40_parser import LrParser, ParseOptions, ParseStats, Configuration, \
    parse, GENERALIZED, FULL_UG, CF_SYMBOLS, SYMBOL_MODES
