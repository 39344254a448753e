# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Anti-unification: the least general term subsuming two given terms."""

from functools import reduce
from typing import Dict, Iterable, Tuple

from lrug.a_terms._10_term import Term, Var, Struct, fresh_var


def anti_unify(a: Term, b: Term) -> Term:
    """Least general generalization of `a` and `b`.

    Every disagreement pair gets a fresh variable, and the same pair seen at
    several positions gets the same variable, so `f(a, a)` and `f(b, b)`
    generalize to `f(X, X)`. Variables of the result are always fresh."""

    pairs: Dict[Tuple[Term, Term], Var] = {}

    def lgg(x: Term, y: Term) -> Term:
        if isinstance(x, Struct) and isinstance(y, Struct) \
                and x.functor == y.functor and len(x.args) == len(y.args):
            if not x.args:
                return x
            return Struct(x.functor,
                          tuple(lgg(p, q) for p, q in zip(x.args, y.args)))
        var = pairs.get((x, y))
        if var is None:
            var = fresh_var()
            pairs[(x, y)] = var
        return var

    return lgg(a, b)


def anti_unify_all(terms: Iterable[Term]) -> Term:
    """Left fold of `anti_unify`. A single term comes back renamed."""
    items = list(terms)
    if not items:
        raise ValueError("Nothing to generalize")
    # folding a term with itself renames it apart
    return reduce(anti_unify, items[1:], anti_unify(items[0], items[0]))
