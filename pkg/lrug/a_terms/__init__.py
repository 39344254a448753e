# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


from ._10_term import Term, Var, Struct, atom, fresh_var, is_ground, \
    rename, term_vars
from ._20_unify import Substitution, unify, unify_sequences, subsumes, match
from ._30_anti_unify import anti_unify, anti_unify_all
from ._40_order import canonical, term_key, compare_terms, sort_terms, \
    variant, terms_tuple_key
from ._50_syntax import parse_term, format_term, format_atom, \
    format_string, tokenize, Token, TokenStream, TermReader, FeatureTable
