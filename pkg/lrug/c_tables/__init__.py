# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


from ._10_items import Item, ItemSet, Closure, closure, check_ug_rules, \
    item_set
from ._20_automaton import State, Automaton, build_automaton
from ._30_lookaheads import END_MARKER, FirstSets, follow_sets, \
    slr_lookaheads, lalr_lookaheads
from ._40_tables import ParseTables, Action, Transition, GapObligation, \
    CompileStats, Prefix, assemble_tables, compile_tables, SLR, LALR, \
    MODES, SHIFT, REDUCE, ACCEPT
from ._50_serialize import serialize_tables, deserialize_tables, \
    format_states, format_item, blake2s_256_hex
