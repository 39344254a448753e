# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""First-order terms. A term is either a variable or a compound: a functor
applied to a tuple of arguments. An atom is a compound without arguments.

Terms are immutable values. Equality is syntactic: `f(X)` equals `f(X)` only
if both `X` have the same name."""

import itertools
from typing import Dict, Iterator, List, Optional, Tuple, Union


class Var:
    __slots__ = ["name"]

    def __init__(self, name: str):
        self.name = name

    def __eq__(self, other):
        return isinstance(other, Var) and other.name == self.name

    def __hash__(self):
        return hash(('V', self.name))

    def __repr__(self):
        return self.name


class Struct:
    __slots__ = ["functor", "args", "_hash"]

    def __init__(self, functor: str, args: Tuple['Term', ...] = ()):
        self.functor = functor
        self.args = tuple(args)
        self._hash: Optional[int] = None

    @property
    def arity(self) -> int:
        return len(self.args)

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Struct) \
               and other.functor == self.functor \
               and other.args == self.args

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.functor, self.args))
        return self._hash

    def __repr__(self):
        if not self.args:
            return self.functor
        return f"{self.functor}({','.join(map(repr, self.args))})"


Term = Union[Var, Struct]

# fresh variables get names no parser can produce, so they never collide
# with the names written in grammar files
_fresh_counter = itertools.count(1)


def fresh_var() -> Var:
    return Var(f"_#{next(_fresh_counter)}")


def atom(name: str) -> Struct:
    return Struct(name, ())


def is_ground(term: Term) -> bool:
    if isinstance(term, Var):
        return False
    return all(is_ground(a) for a in term.args)


def iter_vars(term: Term) -> Iterator[Var]:
    """Variables in depth-first left-to-right order, repetitions included."""
    stack: List[Term] = [term]
    while stack:
        t = stack.pop()
        if isinstance(t, Var):
            yield t
        else:
            stack.extend(reversed(t.args))


def term_vars(term: Term) -> List[Var]:
    """Distinct variables in order of first occurrence."""
    seen: Dict[Var, None] = {}
    for v in iter_vars(term):
        seen.setdefault(v, None)
    return list(seen)


def occurs_in(var: Var, term: Term) -> bool:
    return any(v == var for v in iter_vars(term))


def rename(term: Term, mapping: Optional[Dict[Var, Var]] = None) -> Term:
    """Replaces every variable with a fresh one. Pass the same `mapping` to
    rename several terms so that shared variables stay shared."""
    if mapping is None:
        mapping = {}

    def walk(t: Term) -> Term:
        if isinstance(t, Var):
            v = mapping.get(t)
            if v is None:
                v = fresh_var()
                mapping[t] = v
            return v
        if not t.args:
            return t
        return Struct(t.functor, tuple(walk(a) for a in t.args))

    return walk(term)
