# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Table file format.

The first line is `lrug-tables <version> <checksum>`, the rest is JSON with
sorted keys. Terms are stored in term syntax with variables renamed in
canonical order, so compiling the same grammar twice gives the same bytes.
The checksum is BLAKE2s-256 of the JSON bytes."""

import json
from typing import Any, Dict, FrozenSet, List, Tuple

from Crypto.Hash import BLAKE2s

from lrug._common import TableFormatError, LrugError, TABLES_SIGNATURE, \
    TABLES_FORMAT_VERSION, START_SYMBOL_NAME
from lrug.a_terms import Term, Struct, canonical, format_term, parse_term, \
    term_key
from lrug.b_grammar import Grammar, CFRule, GeneralizedRule, \
    GeneralizedLexeme, LexemeKey, load_grammar, format_grammar, \
    build_backbone
from lrug.c_tables._10_items import Item
from lrug.c_tables._20_automaton import State
from lrug.c_tables._40_tables import ParseTables, Transition, \
    GapObligation, CompileStats, Prefix


def blake2s_256_hex(data: bytes) -> str:
    h_obj = BLAKE2s.new(digest_bits=256)
    h_obj.update(data)
    return h_obj.hexdigest()


def _t(term: Term) -> str:
    return format_term(canonical(term))


def _seq(terms: Tuple[Term, ...]) -> str:
    # one term, so that shared variables stay shared
    return _t(Struct("seq", terms))


def _unseq(text: str) -> Tuple[Term, ...]:
    term = parse_term(text)
    if not isinstance(term, Struct) or term.functor != "seq":
        raise TableFormatError(f"Malformed term sequence {text!r}")
    return term.args


def _sorted_terms(terms: FrozenSet[Term]) -> List[str]:
    return [_t(t) for t in sorted(terms, key=term_key)]


def _transitions(rows: Dict[int, Dict[Term, Transition]]) -> List[list]:
    return [[src, _t(sym), tr.target, _t(tr.symbol)]
            for src, row in sorted(rows.items())
            for sym, tr in sorted(row.items(), key=lambda kv: term_key(kv[0]))]


def tables_to_dict(tables: ParseTables) -> Dict[str, Any]:
    return {
        "mode": tables.mode,
        "grammar": format_grammar(tables.grammar),
        "stats": tables.stats._asdict(),
        "cf_rules": [[_t(r.lhs), [_t(s) for s in r.rhs], list(r.source_ids)]
                     for r in tables.backbone],
        "states": [[[list(i) for i in s.kernel], [list(i) for i in s.items]]
                   for s in tables.states],
        "shifts": _transitions(tables.shifts),
        "gotos": _transitions(tables.gotos),
        "reduces": [[state, rule, _sorted_terms(las)]
                    for state, row in sorted(tables.reduces.items())
                    for rule, las in sorted(row.items())],
        "accepting": sorted(tables.accepting),
        "back_check": [[state, [_seq(p) for p in prefixes]]
                       for state, prefixes in
                       sorted(tables.back_check.items())],
        "gap_add": [[state, [[o.tag, _t(o.cf), [_seq(p) for p in o.prefixes]]
                             for o in obligations]]
                    for state, obligations in sorted(tables.gap_add.items())],
        "rules": [[num, _t(Struct("rule", (g.lhs, Struct("rhs", g.rhs)))),
                   g.exact]
                  for num, g in sorted(tables.rules.items())],
        "lexemes": [[lx.word, _t(lx.cf), _t(lx.phrase),
                     [e.id for e in lx.sources]]
                    for lx in tables.lexemes.values()],
    }


def serialize_tables(tables: ParseTables) -> bytes:
    body = json.dumps(tables_to_dict(tables), sort_keys=True, indent=1,
                      ensure_ascii=False).encode("utf-8") + b"\n"
    header = f"{TABLES_SIGNATURE} {TABLES_FORMAT_VERSION} " \
             f"{blake2s_256_hex(body)}\n"
    return header.encode("ascii") + body


def _check_backbone(stored: List[list], backbone: List[CFRule]):
    rebuilt = [[_t(r.lhs), [_t(s) for s in r.rhs], list(r.source_ids)]
               for r in backbone]
    if stored != rebuilt:
        raise TableFormatError("CF rules do not match the embedded grammar")


def _transitions_from(rows: List[list]) -> Dict[int, Dict[Term, Transition]]:
    result: Dict[int, Dict[Term, Transition]] = {}
    for src, sym, dst, symbol in rows:
        result.setdefault(src, {})[parse_term(sym)] = \
            Transition(dst, parse_term(symbol))
    return result


def _rule_from(num: int, text: str, exact: bool) -> GeneralizedRule:
    term = parse_term(text)
    if not isinstance(term, Struct) or term.functor != "rule" \
            or term.arity != 2 or not isinstance(term.args[1], Struct):
        raise TableFormatError(f"Malformed generalized rule {text!r}")
    return GeneralizedRule(num, term.args[0], term.args[1].args, exact)


def _tables_from_dict(d: Dict[str, Any]) -> ParseTables:
    grammar: Grammar = load_grammar(d["grammar"])
    backbone = build_backbone(grammar)
    _check_backbone(d["cf_rules"], backbone)

    reduces: Dict[int, Dict[int, FrozenSet[Term]]] = {}
    for state, rule, las in d["reduces"]:
        reduces.setdefault(state, {})[rule] = \
            frozenset(parse_term(t) for t in las)

    gap_add: Dict[int, Tuple[GapObligation, ...]] = {}
    for state, obligations in d["gap_add"]:
        gap_add[state] = tuple(
            GapObligation(tag, parse_term(cf),
                          tuple(_unseq(p) for p in prefixes))
            for tag, cf, prefixes in obligations)

    back_check: Dict[int, Tuple[Prefix, ...]] = {
        state: tuple(_unseq(p) for p in prefixes)
        for state, prefixes in d["back_check"]}

    lexemes: Dict[LexemeKey, GeneralizedLexeme] = {}
    for word, cf, phrase, source_ids in d["lexemes"]:
        cf_term = parse_term(cf)
        lexemes[(word, cf_term)] = GeneralizedLexeme(
            word, cf_term, parse_term(phrase),
            tuple(grammar.lexicon[i] for i in source_ids))

    return ParseTables(
        grammar=grammar,
        mode=d["mode"],
        backbone=backbone,
        states=[State(num, tuple(Item(*i) for i in kernel),
                      tuple(Item(*i) for i in items))
                for num, (kernel, items) in enumerate(d["states"])],
        shifts=_transitions_from(d["shifts"]),
        gotos=_transitions_from(d["gotos"]),
        reduces=reduces,
        accepting=frozenset(d["accepting"]),
        back_check=back_check,
        gap_add=gap_add,
        rules={num: _rule_from(num, text, exact)
               for num, text, exact in d["rules"]},
        lexemes=lexemes,
        stats=CompileStats(**d["stats"]))


def deserialize_tables(data: bytes) -> ParseTables:
    """Either the complete tables or `TableFormatError`."""
    header, sep, body = data.partition(b"\n")
    if not sep:
        raise TableFormatError("Not a table file")
    parts = header.decode("ascii", errors="replace").split(" ")
    if len(parts) != 3 or parts[0] != TABLES_SIGNATURE:
        raise TableFormatError("Not a table file")
    if parts[1] != str(TABLES_FORMAT_VERSION):
        raise TableFormatError(f"Unsupported table format version "
                               f"{parts[1]}, expected "
                               f"{TABLES_FORMAT_VERSION}")
    if blake2s_256_hex(body) != parts[2]:
        raise TableFormatError("Checksum mismatch: the table file is "
                               "corrupted")
    try:
        return _tables_from_dict(json.loads(body.decode("utf-8")))
    except TableFormatError:
        raise
    except (LrugError, ValueError, KeyError, TypeError, IndexError) as e:
        raise TableFormatError(f"Malformed table file: {e}") from e


def _symbol_name(symbol: Term, grammar: Grammar) -> str:
    assert isinstance(symbol, Struct)
    if symbol.functor == START_SYMBOL_NAME:
        return grammar.top.upper() + "'"
    head = symbol.functor.upper()
    if not symbol.args:
        return head
    return f"{head}({','.join(format_term(a) for a in symbol.args)})"


def format_item(item: Item, tables: ParseTables) -> str:
    rule = tables.backbone[item.rule]
    g = tables.grammar
    names = [_symbol_name(s, g) for s in rule.rhs]
    names.insert(item.dot, "·")
    return f"{_symbol_name(rule.lhs, g)} → {' '.join(names)}"


def format_states(tables: ParseTables) -> str:
    """States listed as items, kernel items first."""
    st = tables.stats
    lines = [
        f"% {tables.mode} tables: {st.states} states, "
        f"{st.transitions} transitions",
        f"% conflicts: {st.shift_reduce} shift/reduce, "
        f"{st.reduce_reduce} reduce/reduce",
        f"% predictions refused by UG check: {st.filter_hits}"
        + ("" if st.ug_check else " (UG check off)")]
    for state in tables.states:
        lines.append("")
        lines.append(f"State {state.id}")
        for item in (*state.kernel, *state.non_kernel):
            lines.append(f"  {format_item(item, tables)}")
    return "\n".join(lines) + "\n"
