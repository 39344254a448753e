# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


import random
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from lrug.a_terms import Term, Var, Struct, atom
from lrug.b_grammar import Grammar, load_grammar
from lrug.c_tables import ParseTables, compile_tables, SLR

# rules numbered as in the classic textbook example, so CF rule N is rule rN
TOY_GRAMMAR = """
category s. category np. category vp. category pp.
category det. category n. category pron. category v. category prep.
top s.
rule r1: s => [np, vp].
rule r2: vp => [v].
rule r3: vp => [v, np].
rule r4: vp => [v, np, np].
rule r5: vp => [vp, pp].
rule r6: np => [det, n].
rule r7: np => [pron].
rule r8: np => [np, pp].
rule r9: pp => [prep, np].
lex "det": det. lex "n": n. lex "pron": pron. lex "v": v. lex "prep": prep.
"""

# the verb phrase rules differ only in the subcategorization of the verb
VERB_GRAMMAR = """
category s.
category np features [agr].
category vp features [agr].
category v features [agr, sub].
category pron features [agr].
top s.
rule s1: s => [np:[agr=A], vp:[agr=A]].
rule vp1: vp:[agr=Agr] => [v:[agr=Agr,sub=intran]].
rule vp2: vp:[agr=Agr] => [v:[agr=Agr,sub=tran], np:[agr=_]].
rule vp3: vp:[agr=Agr] => [v:[agr=Agr,sub=ditran], np:[agr=_], np:[agr=_]].
rule np1: np:[agr=A] => [pron:[agr=A]].
lex "he": pron:[agr=sg].
lex "they": pron:[agr=pl].
lex "sleeps": v:[agr=sg,sub=intran].
lex "sleep": v:[agr=pl,sub=intran].
lex "sees": v:[agr=sg,sub=tran].
lex "gives": v:[agr=sg,sub=ditran].
"""

VERB_GRAMMAR_DISTINGUISHED = VERB_GRAMMAR.replace(
    "category v features [agr, sub].",
    "category v features [agr, sub] distinguish [sub].")

# three UG rules behind one CF rule, and a word with two entries of one
# CF symbol
AGREEMENT_GRAMMAR = """
category s.
category np features [agr].
category vp features [agr].
category det features [agr].
category n features [agr].
category v features [agr].
top s.
rule s1: s => [np:[agr=A], vp:[agr=A]].
rule np_sg: np:[agr=sg] => [det:[agr=sg], n:[agr=sg]].
rule np_pl: np:[agr=pl] => [det:[agr=pl], n:[agr=pl]].
rule np_mass: np:[agr=mass] => [det:[agr=mass], n:[agr=mass]].
rule vp1: vp:[agr=A] => [v:[agr=A]].
lex "the": det:[agr=_].
lex "dog": n:[agr=sg].
lex "dogs": n:[agr=pl].
lex "sheep": n:[agr=sg].
lex "sheep": n:[agr=pl].
lex "water": n:[agr=mass].
lex "walks": v:[agr=sg].
lex "walk": v:[agr=pl].
lex "flows": v:[agr=mass].
"""

# SLR reduces R -> L on "=" in the state after L; LALR does not
ASSIGNMENT_GRAMMAR = """
category s. category l. category r.
category eq. category star. category id.
top s.
rule s1: s => [l, eq, r].
rule s2: s => [r].
rule l1: l => [star, r].
rule l2: l => [id].
rule r1: r => [l].
lex "=": eq. lex "*": star. lex "x": id.
"""

MOVEMENT_GRAMMAR = """
% what does john seek _
category q. category wh. category aux. category pn. category v.
category s features [gap].
category vp features [gap].
category np features [gap].
top q.
rule whq: q => [wh, aux, s:[gap=np]] adds maxproj np:[gap=np].
rule yn: q => [aux, s:[gap=none]].
rule s1: s:[gap=G] => [np:[gap=none], vp:[gap=G]].
rule vp1: vp:[gap=G] => [v, np:[gap=G]].
rule np1: np:[gap=none] => [pn].
rule np_gap: np:[gap=np] => [] consumes maxproj.
lex "what": wh. lex "does": aux. lex "john": pn. lex "seek": v.
"""

# the gap is licensed by "what" only; both fronted words share a CF symbol
BACK_CHECK_GRAMMAR = """
category q. category pn. category v.
category fronted features [kind].
category s features [gap].
category vp features [gap].
category np features [gap].
top q.
rule topic: q => [fronted:[kind=wh], s:[gap=np]] adds maxproj np:[gap=np].
rule plain: q => [fronted:[kind=so], s:[gap=none]].
rule s1: s:[gap=G] => [np:[gap=none], vp:[gap=G]].
rule vp1: vp:[gap=G] => [v, np:[gap=G]].
rule np1: np:[gap=none] => [pn].
rule np_gap: np:[gap=np] => [] consumes maxproj.
lex "what": fronted:[kind=wh]. lex "so": fronted:[kind=so].
lex "john": pn. lex "sees": v.
"""

# an empty PP can follow any VP, so without gap lists it loops
PP_GAP_GRAMMAR = """
category s. category np. category vp. category pp.
category pn. category v. category p.
top s.
rule s1: s => [np, vp].
rule np1: np => [pn].
rule vp1: vp => [v].
rule vp_pp: vp => [vp, pp].
rule pp1: pp => [p, np].
rule pp_gap: pp => [] consumes maxproj.
lex "john": pn. lex "paris": pn. lex "runs": v. lex "in": p.
"""

# a fronted object and a fronted verb, on separate gap lists
TWO_FILLER_GRAMMAR = """
category q. category vq. category s. category vp. category vx.
category np. category wh. category v. category pn.
top q.
rule whq: q => [wh, vq] adds maxproj np.
rule vfront: vq => [v, s] adds verb vx.
rule s1: s => [np, vp].
rule vp1: vp => [vx, np].
rule vx1: vx => [v].
rule np1: np => [pn].
rule np_gap: np => [] consumes maxproj.
rule vx_gap: vx => [] consumes verb.
lex "what": wh. lex "sees": v. lex "john": pn.
"""

SEM_GRAMMAR = """
category s. category np. category vp. category pn. category v.
top s.
rule s1: s => [np, vp] sem s(pred(P, X), X, P).
rule np1: np => [pn] sem np(M, M).
rule vp1: vp => [v] sem vp(M, M).
lex "john": pn sem john.
lex "mary": pn sem mary.
lex "sleeps": v sem sleep.
"""

# grammar and sentences of every fixture without gap lists or semantics
PLAIN_FIXTURES: Dict[str, Tuple[str, List[str]]] = {
    "toy": (TOY_GRAMMAR, [
        "pron v", "pron v det n prep det n", "det det",
        "det n v pron pron", "pron v pron prep pron prep pron"]),
    "verb": (VERB_GRAMMAR, [
        "he sleeps", "they sleep", "he sleep", "he sees they",
        "he gives he they", "they sees he"]),
    "verb-distinguished": (VERB_GRAMMAR_DISTINGUISHED, [
        "he sleeps", "he sees they", "he gives he they", "he sleeps he"]),
    "agreement": (AGREEMENT_GRAMMAR, [
        "the dog walks", "the dogs walks", "the sheep walks",
        "the sheep walk", "the water flows", "the water walk"]),
    "assignment": (ASSIGNMENT_GRAMMAR, [
        "x", "x = x", "* x = * * x", "= x", "* x"]),
}


@lru_cache(maxsize=None)
def grammar_of(text: str) -> Grammar:
    return load_grammar(text)


@lru_cache(maxsize=None)
def tables_of(text: str, mode: str = SLR) -> ParseTables:
    return compile_tables(grammar_of(text), mode)


def gen_random_term(rnd: random.Random, depth: int = 3) -> Term:
    if depth == 0 or rnd.random() < 0.3:
        if rnd.random() < 0.5:
            return Var(rnd.choice(["X", "Y", "Z"]))
        return atom(rnd.choice(["a", "b", "c"]))
    functor = rnd.choice(["f", "g"])
    # "f" is binary and "g" unary, so arity clashes stay rare
    arity = 2 if functor == "f" else 1
    return Struct(functor,
                  tuple(gen_random_term(rnd, depth - 1) for _ in range(arity)))


def gen_random_grammar(rnd: random.Random) -> str:
    """A gap-free grammar without empty productions or unary cycles. Unit
    rules only go from a phrasal category to a later one."""
    phrasal = [f"p{i}" for i in range(rnd.randint(2, 3))]
    lexical = [f"l{i}" for i in range(rnd.randint(2, 3))]
    feature_slots = 4
    decls: Dict[str, Tuple[List[str], List[str]]] = {}
    lines: List[str] = []
    for cat in phrasal + lexical:
        count = rnd.randint(0, min(2, feature_slots))
        feature_slots -= count
        features = ["f", "g"][:count]
        distinguishing = [f for f in features
                          if cat != "p0" and rnd.random() < 0.3]
        decls[cat] = (features, distinguishing)
        line = f"category {cat}"
        if features:
            line += f" features [{', '.join(features)}]"
        if distinguishing:
            line += f" distinguish [{', '.join(distinguishing)}]"
        lines.append(line + ".")
    lines.append("top p0.")

    def phrase(cat: str) -> str:
        features, distinguishing = decls[cat]
        if not features:
            return cat
        values = []
        for f in features:
            if f in distinguishing or rnd.random() < 0.4:
                values.append(f"{f}={rnd.choice(['a', 'b'])}")
            else:
                values.append(f"{f}={rnd.choice(['X', 'Y', '_'])}")
        return f"{cat}:[{','.join(values)}]"

    for i in range(rnd.randint(3, 8)):
        lhs = "p0" if i == 0 else rnd.choice(phrasal)
        length = rnd.choice([1, 2, 2, 3])
        if length == 1:
            later = phrasal[phrasal.index(lhs) + 1:]
            rhs = [rnd.choice(later + lexical)]
        else:
            rhs = [rnd.choice(phrasal + lexical) for _ in range(length)]
        lines.append(f"rule r{i}: {phrase(lhs)} => "
                     f"[{', '.join(phrase(c) for c in rhs)}].")

    for w in range(rnd.randint(3, 5)):
        for _ in range(rnd.choice([1, 1, 2])):
            lines.append(f'lex "w{w}": {phrase(rnd.choice(lexical))}.')
    return "\n".join(lines) + "\n"


def gen_sentence(grammar: Grammar, rnd: random.Random,
                 max_words: int = 6) -> Optional[List[str]]:
    """Random expansion of the top category by CF categories, ignoring
    features. None if it runs too deep or too long."""
    words_by_cat: Dict[str, List[str]] = {}
    for e in grammar.lexicon:
        assert isinstance(e.phrase, Struct)
        words_by_cat.setdefault(e.phrase.functor, []).append(e.word)

    def expand(cat: str, depth: int) -> Optional[List[str]]:
        if cat in words_by_cat:
            return [rnd.choice(words_by_cat[cat])]
        rules = [r for r in grammar.rules
                 if isinstance(r.lhs, Struct) and r.lhs.functor == cat]
        if not rules or depth > 5:
            return None
        rule = rnd.choice(rules)
        result: List[str] = []
        for p in rule.rhs:
            assert isinstance(p, Struct)
            part = expand(p.functor, depth + 1)
            if part is None:
                return None
            result.extend(part)
            if len(result) > max_words:
                return None
        return result

    return expand(grammar.top, 0)
