# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Parse trees.

Phase one leaves the choice of UG rule and lexical entry open where a CF
rule or lexeme has several sources; phase two fills `source` and `entry`.

Printed form: `(rule child ...)`, where `rule` is the id of the chosen UG
rule, or the ids of all candidates joined by `|` while the choice is open.
Leaves print as `word/cf`."""

from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, \
    Sequence, Tuple, TypeVar, Union

from lrug.a_terms import format_term
from lrug.b_grammar import Grammar, CFRule, GeneralizedLexeme, LexEntry, \
    UGRule


class Leaf(NamedTuple):
    word: str
    position: int
    lexeme: GeneralizedLexeme
    entry: Optional[LexEntry] = None


class Apply(NamedTuple):
    cf_rule: int
    children: Tuple['Node', ...]
    source: Optional[UGRule] = None


class GapLeaf(NamedTuple):
    """An empty production."""
    cf_rule: int
    source: Optional[UGRule] = None


Node = Union[Leaf, Apply, GapLeaf]

T = TypeVar("T")


def iter_nodes(node: Node) -> Iterator[Node]:
    """Pre-order."""
    stack: List[Node] = [node]
    while stack:
        n = stack.pop()
        yield n
        if isinstance(n, Apply):
            stack.extend(reversed(n.children))


def fold_tree(node: Node, combine: Callable[[Node, List[T]], T]) -> T:
    """Bottom-up, without recursion: `combine` gets every node with the
    results of its children, left to right. Trees of any depth are fine."""
    results: List[T] = []
    for n in reversed(list(iter_nodes(node))):
        children = [results.pop() for _ in n.children] \
            if isinstance(n, Apply) else []
        results.append(combine(n, children))
    assert len(results) == 1
    return results[0]


def count_gaps(node: Node, backbone: Sequence[CFRule]) -> Dict[str, int]:
    """Empty productions in the tree, per gap list."""
    result: Dict[str, int] = {}
    for n in iter_nodes(node):
        if isinstance(n, GapLeaf):
            tag = backbone[n.cf_rule].sources[0].gap_role.tag
            assert tag is not None
            result[tag] = result.get(tag, 0) + 1
    return result


def _rule_label(cf_rule: int, source: Optional[UGRule],
                backbone: Sequence[CFRule]) -> str:
    if source is not None:
        return source.id
    return "|".join(backbone[cf_rule].source_ids)


def format_tree(node: Node, grammar: Grammar,
                backbone: Sequence[CFRule]) -> str:
    def combine(n: Node, children: List[str]) -> str:
        if isinstance(n, Leaf):
            if n.entry is not None:
                return grammar.entry_label(n.entry)
            return f"{n.word}/{format_term(n.lexeme.cf)}"
        label = _rule_label(n.cf_rule, n.source, backbone)
        if isinstance(n, GapLeaf):
            return f"({label})"
        return f"({label} {' '.join(children)})"

    return fold_tree(node, combine)
