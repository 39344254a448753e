# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from lrug.a_terms._10_term import Term, Var, Struct


class Substitution(Mapping[Var, Term]):
    """Variable bindings produced by unification.

    Bindings are kept in triangular form (a bound value may mention other
    bound variables); `apply` resolves them completely, so applying the
    substitution twice gives the same result as applying it once. The occurs
    check guarantees that no variable is bound to a term containing it.
    """

    __slots__ = ["_bindings"]

    def __init__(self, bindings: Optional[Dict[Var, Term]] = None):
        self._bindings: Dict[Var, Term] = bindings if bindings else {}

    def __getitem__(self, var: Var) -> Term:
        return self._bindings[var]

    def __iter__(self) -> Iterator[Var]:
        return iter(self._bindings)

    def __len__(self) -> int:
        return len(self._bindings)

    def __repr__(self):
        items = ', '.join(f'{k!r}: {self.apply(k)!r}' for k in self._bindings)
        return f'{{{items}}}'

    def walk(self, term: Term) -> Term:
        while isinstance(term, Var):
            bound = self._bindings.get(term)
            if bound is None:
                return term
            term = bound
        return term

    def apply(self, term: Term) -> Term:
        term = self.walk(term)
        if isinstance(term, Var) or not term.args:
            return term
        return Struct(term.functor, tuple(self.apply(a) for a in term.args))

    __call__ = apply


def _occurs(var: Var, term: Term, bindings: Dict[Var, Term]) -> bool:
    stack: List[Term] = [term]
    while stack:
        t = stack.pop()
        while isinstance(t, Var) and t in bindings:
            t = bindings[t]
        if isinstance(t, Var):
            if t == var:
                return True
        else:
            stack.extend(t.args)
    return False


def unify(a: Term, b: Term,
          subst: Optional[Substitution] = None) -> Optional[Substitution]:
    """Most general unifier of `a` and `b` extending `subst`, or None.

    The given substitution is never modified. Occurs check is on, so
    `unify(X, f(X))` fails."""
    bindings: Dict[Var, Term] = dict(subst._bindings) if subst else {}

    def walk(t: Term) -> Term:
        while isinstance(t, Var):
            bound = bindings.get(t)
            if bound is None:
                return t
            t = bound
        return t

    pairs: List[Tuple[Term, Term]] = [(a, b)]
    while pairs:
        x, y = pairs.pop()
        x = walk(x)
        y = walk(y)
        if x is y:
            continue
        if isinstance(x, Var):
            if isinstance(y, Var) and x == y:
                continue
            if _occurs(x, y, bindings):
                return None
            bindings[x] = y
        elif isinstance(y, Var):
            if _occurs(y, x, bindings):
                return None
            bindings[y] = x
        else:
            if x.functor != y.functor or len(x.args) != len(y.args):
                return None
            pairs.extend(zip(x.args, y.args))
    return Substitution(bindings)


def unify_sequences(xs: Tuple[Term, ...], ys: Tuple[Term, ...],
                    subst: Optional[Substitution] = None) \
        -> Optional[Substitution]:
    if len(xs) != len(ys):
        return None
    result = subst if subst is not None else Substitution()
    for x, y in zip(xs, ys):
        unified = unify(x, y, result)
        if unified is None:
            return None
        result = unified
    return result


def match(general: Term, specific: Term) -> Optional[Dict[Var, Term]]:
    """One-way matching: bindings for the variables of `general` only.
    Variables of `specific` behave as constants."""
    bindings: Dict[Var, Term] = {}
    pairs: List[Tuple[Term, Term]] = [(general, specific)]
    while pairs:
        g, s = pairs.pop()
        if isinstance(g, Var):
            bound = bindings.get(g)
            if bound is None:
                bindings[g] = s
            elif bound != s:
                return None
        elif isinstance(s, Var):
            return None
        else:
            if g.functor != s.functor or len(g.args) != len(s.args):
                return None
            pairs.extend(zip(g.args, s.args))
    return bindings


def subsumes(general: Term, specific: Term) -> bool:
    return match(general, specific) is not None
