# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Canonical forms and the total order on terms.

Variables are numbered depth-first, left to right, by first occurrence. The
order puts variables before compounds; compounds compare by arity, then
functor name, then arguments. It is total, stable across runs and consistent
with equality of canonical forms."""

from typing import Dict, Iterable, List, Tuple

from lrug.a_terms._10_term import Term, Var, Struct, term_vars

TermKey = tuple


def canonical(term: Term, prefix: str = "_") -> Term:
    """The term with variables renamed `_0`, `_1`, ... by first occurrence."""
    mapping: Dict[Var, Var] = {v: Var(f"{prefix}{i}")
                               for i, v in enumerate(term_vars(term))}

    def walk(t: Term) -> Term:
        if isinstance(t, Var):
            return mapping[t]
        if not t.args:
            return t
        return Struct(t.functor, tuple(walk(a) for a in t.args))

    return walk(term)


def term_key(term: Term) -> TermKey:
    numbers: Dict[Var, int] = {}

    def key(t: Term) -> TermKey:
        if isinstance(t, Var):
            if t not in numbers:
                numbers[t] = len(numbers)
            return 0, numbers[t]
        return 1, len(t.args), t.functor, tuple(key(a) for a in t.args)

    return key(term)


def compare_terms(a: Term, b: Term) -> int:
    ka, kb = term_key(a), term_key(b)
    return (ka > kb) - (ka < kb)


def sort_terms(terms: Iterable[Term]) -> List[Term]:
    """Sorted without duplicates (by canonical form)."""
    unique: Dict[TermKey, Term] = {}
    for t in terms:
        unique.setdefault(term_key(t), t)
    return [unique[k] for k in sorted(unique)]


def variant(a: Term, b: Term) -> bool:
    """Equal up to a bijective renaming of variables."""
    return term_key(a) == term_key(b)


def terms_tuple_key(terms: Tuple[Term, ...]) -> TermKey:
    return term_key(Struct("", tuple(terms)))
