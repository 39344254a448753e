# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Unification grammar and lexicon.

A phrase is a term whose functor is its category and whose arguments follow
the declared feature order of the category: `v:[agr=sg,sub=tran]` is the
term `v(sg,tran)`."""

from functools import cached_property
from typing import Dict, List, Mapping, NamedTuple, Optional, Tuple

from lrug.a_terms import Term, Struct, atom, rename, fresh_var, \
    format_term

NONE_KIND = "none"
ADDS_KIND = "adds"
CONSUMES_KIND = "consumes"


class CategoryDecl(NamedTuple):
    name: str
    features: Tuple[str, ...]
    # a subset of features, in the declared feature order
    distinguishing: Tuple[str, ...] = ()

    @property
    def distinguishing_positions(self) -> Tuple[int, ...]:
        return tuple(i for i, f in enumerate(self.features)
                     if f in self.distinguishing)


class GapRole(NamedTuple):
    kind: str = NONE_KIND
    tag: Optional[str] = None
    # the phrase placed on the gap list by an `adds` rule
    phrase: Optional[Term] = None

    @property
    def adds(self) -> bool:
        return self.kind == ADDS_KIND

    @property
    def consumes(self) -> bool:
        return self.kind == CONSUMES_KIND


NO_GAP = GapRole()

_NOTHING = atom("none")


class UGRule(NamedTuple):
    id: str
    lhs: Term
    rhs: Tuple[Term, ...]
    sem: Optional[Term] = None
    gap_role: GapRole = NO_GAP
    line: int = 0

    def as_term(self) -> Struct:
        """All terms of the rule in one compound, so that variables shared
        between them stay shared through renaming and generalization."""
        return Struct("rule", (
            self.lhs,
            Struct("rhs", self.rhs),
            self.sem if self.sem is not None else _NOTHING,
            self.gap_role.phrase if self.gap_role.phrase is not None
            else _NOTHING))

    def renamed(self) -> 'UGRule':
        t = rename(self.as_term())
        assert isinstance(t, Struct)
        lhs, rhs, sem, gap_phrase = t.args
        assert isinstance(rhs, Struct)
        return self._replace(
            lhs=lhs,
            rhs=rhs.args,
            sem=sem if self.sem is not None else None,
            gap_role=self.gap_role._replace(phrase=gap_phrase)
            if self.gap_role.phrase is not None else self.gap_role)


class LexEntry(NamedTuple):
    # position in the lexicon
    id: int
    word: str
    phrase: Term
    sem: Optional[Term] = None
    line: int = 0

    def renamed(self) -> 'LexEntry':
        t = rename(Struct("lex", (self.phrase, self.sem
                                  if self.sem is not None else _NOTHING)))
        assert isinstance(t, Struct)
        return self._replace(phrase=t.args[0],
                             sem=t.args[1] if self.sem is not None else None)


def map_to_cf(phrase: Term, categories: Mapping[str, CategoryDecl]) -> Term:
    """Maps a phrase to its context-free symbol: the category applied to the
    values of its distinguishing features. Those values are ground, so the
    symbol does not change when the phrase gets further instantiated."""
    assert isinstance(phrase, Struct)
    decl = categories[phrase.functor]
    positions = decl.distinguishing_positions
    if not positions:
        return atom(phrase.functor)
    return Struct(phrase.functor, tuple(phrase.args[i] for i in positions))


class Grammar:
    """Immutable after construction. Use `load_grammar` to build it from
    text; derived tables are computed on first use."""

    def __init__(self,
                 categories: Mapping[str, CategoryDecl],
                 top: str,
                 rules: Tuple[UGRule, ...],
                 lexicon: Tuple[LexEntry, ...]):
        self.categories: Dict[str, CategoryDecl] = dict(categories)
        self.top = top
        self.rules = tuple(rules)
        self.lexicon = tuple(lexicon)

    def __repr__(self):
        return f"Grammar(top={self.top!r}, {len(self.rules)} rules, " \
               f"{len(self.lexicon)} lexical entries)"

    @cached_property
    def features(self) -> Dict[str, Tuple[str, ...]]:
        return {name: d.features for name, d in self.categories.items()}

    @cached_property
    def rules_by_id(self) -> Dict[str, UGRule]:
        return {r.id: r for r in self.rules}

    @cached_property
    def entries_by_word(self) -> Dict[str, List[LexEntry]]:
        result: Dict[str, List[LexEntry]] = {}
        for e in self.lexicon:
            result.setdefault(e.word, []).append(e)
        return result

    @cached_property
    def has_sem(self) -> bool:
        return any(r.sem is not None for r in self.rules) \
               or any(e.sem is not None for e in self.lexicon)

    @cached_property
    def lexical_categories(self) -> List[str]:
        seen: Dict[str, None] = {}
        for e in self.lexicon:
            assert isinstance(e.phrase, Struct)
            seen.setdefault(e.phrase.functor, None)
        return list(seen)

    def map_to_cf(self, phrase: Term) -> Term:
        return map_to_cf(phrase, self.categories)

    def top_phrase(self) -> Term:
        """The top category with all features unconstrained."""
        return open_phrase(self.categories[self.top])

    @cached_property
    def _entry_labels(self) -> Dict[int, str]:
        labels: Dict[int, str] = {}
        for word, entries in self.entries_by_word.items():
            by_cf: Dict[Term, List[int]] = {}
            for e in entries:
                by_cf.setdefault(self.map_to_cf(e.phrase), []).append(e.id)
            for idx, e in enumerate(entries):
                cf = self.map_to_cf(e.phrase)
                label = f"{word}/{format_term(cf)}"
                if len(by_cf[cf]) > 1:
                    label += f"@{idx}"
                labels[e.id] = label
        return labels

    def entry_label(self, entry: LexEntry) -> str:
        """`word/cf`, with `@k` (index among the entries of the word) when
        several entries of the word share the CF symbol."""
        return self._entry_labels[entry.id]


def open_phrase(decl: CategoryDecl) -> Term:
    """The category with every feature a fresh variable."""
    return Struct(decl.name, tuple(fresh_var() for _ in decl.features))
