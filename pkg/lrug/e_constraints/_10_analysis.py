# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Phases two and three.

Phase two picks a UG rule for every rule node and a lexical entry for every
leaf of a phase-one tree, and keeps the choices under which all the full
constraints unify. Choices already fixed in the tree are kept. Phase three
composes the semantic terms of the chosen rules and entries."""

from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, \
    Sequence, Tuple, Union

from lrug.a_terms import Term, Struct, Substitution, fresh_var, unify, \
    term_key
from lrug.b_grammar import Grammar, CFRule, LexEntry, UGRule, build_backbone
from lrug.d_runtime import Node, Leaf, Apply, GapLeaf, format_tree, \
    fold_tree, iter_nodes

Sems = Tuple[Optional[Term], ...]


class Analysis(NamedTuple):
    # every node has its choice filled in
    tree: Node
    binding: Substitution
    root_phrase: Term
    # the renamed semantic terms of the chosen rules and entries, pre-order
    sems: Sems = ()
    meaning: Optional[Term] = None

    def choices(self) -> List[str]:
        """Chosen rule ids and lexical entry numbers, pre-order."""
        result: List[str] = []
        stack: List[Node] = [self.tree]
        while stack:
            node = stack.pop()
            if isinstance(node, Leaf):
                assert node.entry is not None
                result.append(str(node.entry.id))
            else:
                assert node.source is not None
                result.append(node.source.id)
                if isinstance(node, Apply):
                    stack.extend(reversed(node.children))
        return result


Partial = Tuple[Node, Term, Substitution, Sems]


class _Choice(NamedTuple):
    # the UG rule or lexical entry, as written in the grammar
    source: Union[UGRule, LexEntry]
    # its phrase (left side for rules), renamed apart
    phrase: Term
    rhs: Tuple[Term, ...]
    sem: Optional[Term]


def _choices(node: Node, backbone: Sequence[CFRule]) -> Iterator[_Choice]:
    if isinstance(node, Leaf):
        entries = (node.entry,) if node.entry is not None \
            else node.lexeme.sources
        for entry in entries:
            e = entry.renamed()
            yield _Choice(entry, e.phrase, (), e.sem)
        return
    sources = (node.source,) if node.source is not None \
        else backbone[node.cf_rule].sources
    for source in sources:
        r = source.renamed()
        yield _Choice(source, r.lhs, r.rhs, r.sem)


def _flatten(tree: Node) -> Tuple[List[Node], List[Tuple[int, int]]]:
    """Nodes in pre-order, and for each the index of its mother and its
    position among the daughters. The root has mother -1."""
    nodes: List[Node] = []
    slots: List[Tuple[int, int]] = []
    stack: List[Tuple[Node, int, int]] = [(tree, -1, 0)]
    while stack:
        node, mother, position = stack.pop()
        index = len(nodes)
        nodes.append(node)
        slots.append((mother, position))
        if isinstance(node, Apply):
            stack.extend((child, index, i) for i, child
                         in reversed(list(enumerate(node.children))))
    return nodes, slots


def _labeled(nodes: List[Node], picked: List[_Choice]) -> Node:
    built: List[Node] = []
    for node, choice in zip(reversed(nodes), reversed(picked)):
        if isinstance(node, Leaf):
            assert isinstance(choice.source, LexEntry)
            built.append(node._replace(entry=choice.source))
            continue
        assert isinstance(choice.source, UGRule)
        if isinstance(node, GapLeaf):
            built.append(GapLeaf(node.cf_rule, choice.source))
        else:
            children = tuple(built.pop() for _ in node.children)
            built.append(Apply(node.cf_rule, children, choice.source))
    assert len(built) == 1
    return built[0]


def _analyze(tree: Node, subst: Substitution,
             backbone: Sequence[CFRule]) -> Iterator[Partial]:
    """Backtracking over the nodes in pre-order. A node takes the next
    candidate whose phrase unifies with its slot in the mother's rule, so
    the results come in the order of the candidates, root first."""
    nodes, slots = _flatten(tree)
    picked: List[_Choice] = []
    # the binding before each picked node, and the one after the last
    bindings: List[Substitution] = [subst]
    pending: List[Iterator[_Choice]] = [_choices(nodes[0], backbone)]
    while pending:
        k = len(pending) - 1
        mother, position = slots[k]
        found: Optional[Tuple[_Choice, Substitution]] = None
        for choice in pending[k]:
            s: Optional[Substitution] = bindings[k]
            if mother >= 0:
                s = unify(choice.phrase, picked[mother].rhs[position], s)
            if s is not None:
                found = choice, s
                break
        del picked[k:]
        del bindings[k + 1:]
        if found is None:
            pending.pop()
            continue
        picked.append(found[0])
        bindings.append(found[1])
        if len(picked) < len(nodes):
            pending.append(_choices(nodes[len(picked)], backbone))
        else:
            yield _labeled(nodes, picked), picked[0].phrase, found[1], \
                tuple(c.sem for c in picked)


def phase_two(tree: Node, grammar: Grammar,
              backbone: Optional[Sequence[CFRule]] = None) \
        -> Iterator[Analysis]:
    """All consistent choices, depth-first, daughters left to right."""
    if backbone is None:
        backbone = build_backbone(grammar)
    for labeled, phrase, subst, sems in _analyze(tree, Substitution(),
                                                 backbone):
        yield Analysis(labeled, subst, subst.apply(phrase), sems)


def _compose(tree: Node, sems: Sems,
             subst: Substitution) -> Optional[Tuple[Term, Substitution]]:
    """The meaning of the tree, daughters before mothers. `sems` follow the
    nodes in pre-order."""
    nodes = list(iter_nodes(tree))
    assert len(nodes) == len(sems)
    meanings: List[Term] = []
    for node, sem in zip(reversed(nodes), reversed(sems)):
        meaning = fresh_var()
        daughters = [meanings.pop() for _ in node.children] \
            if isinstance(node, Apply) else []
        meanings.append(meaning)
        if sem is None:
            continue
        if isinstance(node, Leaf):
            pattern: Term = meaning
        else:
            assert isinstance(sem, Struct)
            pattern = Struct(sem.functor, (meaning, *daughters))
        unified = unify(pattern, sem, subst)
        if unified is None:
            return None
        subst = unified
    assert len(meanings) == 1
    return meanings[0], subst


def phase_three(analysis: Analysis, grammar: Grammar) -> Iterator[Analysis]:
    """Composes meanings bottom-up. A rule's semantic term gets the mother's
    meaning as first argument and the daughters' meanings after it."""
    if not grammar.has_sem:
        yield analysis
        return
    composed = _compose(analysis.tree, analysis.sems, analysis.binding)
    if composed is None:
        return
    meaning, subst = composed
    yield analysis._replace(binding=subst,
                            root_phrase=subst.apply(analysis.root_phrase),
                            meaning=subst.apply(meaning))


def strip_choices(node: Node) -> Node:
    def combine(n: Node, children: List[Node]) -> Node:
        if isinstance(n, Leaf):
            return n._replace(entry=None)
        if isinstance(n, GapLeaf):
            return n._replace(source=None)
        return Apply(n.cf_rule, tuple(children))

    return fold_tree(node, combine)


def analysis_key(analysis: Analysis, grammar: Grammar,
                 backbone: Sequence[CFRule]) -> tuple:
    """Equal for analyses of the same tree with variant bindings of the
    root, whatever the choices."""
    meaning = analysis.meaning if analysis.meaning is not None \
        else Struct("none")
    return (format_tree(strip_choices(analysis.tree), grammar, backbone),
            term_key(Struct("", (analysis.root_phrase, meaning))))


def dedupe(analyses: Iterable[Analysis], grammar: Grammar,
           backbone: Sequence[CFRule]) -> Iterator[Analysis]:
    seen: Dict[tuple, None] = {}
    for a in analyses:
        key = analysis_key(a, grammar, backbone)
        if key not in seen:
            seen[key] = None
            yield a
