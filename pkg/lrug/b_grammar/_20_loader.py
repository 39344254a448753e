# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Grammar file reader and writer.

    % comment
    category v features [agr, sub] distinguish [sub].
    category det.
    top s.
    rule r2: vp:[agr=Agr] => [v:[agr=Agr,sub=intran]].
    rule gap_np: np:[agr=A] => [] consumes maxproj.
    rule whq: s => [wh, s] adds maxproj np.
    lex "walks": v:[agr=sg,sub=intran] sem walk.

A bare name of a category with features stands for the category with every
feature unconstrained. Categories must be declared before they are used."""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from lrug._common import GrammarValidationError, GAP_TAGS
from lrug.a_terms import Term, Struct, is_ground, tokenize, Token, \
    TokenStream, TermReader, format_term, format_atom, format_string, \
    canonical
from lrug.b_grammar._10_model import CategoryDecl, GapRole, UGRule, \
    LexEntry, Grammar, NO_GAP, ADDS_KIND, CONSUMES_KIND, open_phrase, \
    map_to_cf

log = logging.getLogger(__name__)


class _Loader:
    def __init__(self, source: str):
        self.stream = TokenStream(tokenize(source))
        self.categories: Dict[str, CategoryDecl] = {}
        self.features: Dict[str, Tuple[str, ...]] = {}
        self.reader = TermReader(self.stream, self.features)
        self.top: Optional[str] = None
        self.rules: List[UGRule] = []
        self.lexicon: List[LexEntry] = []

    def load(self) -> Grammar:
        s = self.stream
        while not s.at("eof"):
            self.reader.new_scope()
            keyword = s.expect("name", "a statement")
            if keyword.text == "category":
                self._category()
            elif keyword.text == "top":
                self._top(keyword)
            elif keyword.text == "rule":
                self._rule(keyword)
            elif keyword.text == "lex":
                self._lex(keyword)
            else:
                raise s.error(f"Unknown statement {keyword.text!r}", keyword)
            s.expect_punct(".")
        if self.top is None:
            raise GrammarValidationError("No top category declared")
        grammar = Grammar(self.categories, self.top, tuple(self.rules),
                          tuple(self.lexicon))
        _validate(grammar)
        log.info("Loaded %r", grammar)
        return grammar

    def _names_list(self) -> List[Token]:
        s = self.stream
        s.expect_punct("[")
        names: List[Token] = []
        if not s.at_punct("]"):
            names.append(s.expect("name", "a feature name"))
            while s.at_punct(","):
                s.advance()
                names.append(s.expect("name", "a feature name"))
        s.expect_punct("]")
        return names

    def _category(self):
        s = self.stream
        name_tok = s.expect("name", "a category name")
        if name_tok.text in self.categories:
            raise s.error(f"Category {name_tok.text!r} declared twice",
                          name_tok)
        features: List[str] = []
        distinguishing: List[str] = []
        if s.at("name", "features"):
            s.advance()
            for tok in self._names_list():
                if tok.text in features:
                    raise s.error(f"Feature {tok.text!r} declared twice", tok)
                features.append(tok.text)
        if s.at("name", "distinguish"):
            s.advance()
            for tok in self._names_list():
                if tok.text not in features:
                    raise s.error(f"Distinguishing feature {tok.text!r} is "
                                  f"not a feature of {name_tok.text!r}", tok)
                distinguishing.append(tok.text)
        decl = CategoryDecl(
            name_tok.text, tuple(features),
            tuple(f for f in features if f in distinguishing))
        self.categories[decl.name] = decl
        self.features[decl.name] = decl.features

    def _top(self, keyword: Token):
        s = self.stream
        name_tok = s.expect("name", "a category name")
        if self.top is not None:
            raise s.error("Top category declared twice", keyword)
        if name_tok.text not in self.categories:
            raise s.error(f"Undeclared category {name_tok.text!r}", name_tok)
        self.top = name_tok.text

    def _phrase(self) -> Term:
        s = self.stream
        tok = s.current
        term = self.reader.read()
        if not isinstance(term, Struct):
            raise s.error("Expected a phrase, found a variable", tok)
        decl = self.categories.get(term.functor)
        if decl is None:
            raise s.error(f"Undeclared category {term.functor!r}", tok)
        if not term.args and decl.features:
            return open_phrase(decl)
        if len(term.args) != len(decl.features):
            raise s.error(f"Category {decl.name!r} has "
                          f"{len(decl.features)} features, "
                          f"found {len(term.args)}", tok)
        return term

    def _sem(self) -> Optional[Term]:
        s = self.stream
        if s.at("name", "sem"):
            s.advance()
            return self.reader.read()
        return None

    def _rule(self, keyword: Token):
        s = self.stream
        if s.at("qatom"):
            id_tok = s.advance()
        else:
            id_tok = s.expect("name", "a rule identifier")
        s.expect_punct(":")
        lhs = self._phrase()
        s.expect("arrow", "'=>'")
        s.expect_punct("[")
        rhs: List[Term] = []
        if not s.at_punct("]"):
            rhs.append(self._phrase())
            while s.at_punct(","):
                s.advance()
                rhs.append(self._phrase())
        s.expect_punct("]")
        gap_role = NO_GAP
        if s.at("name", ADDS_KIND) or s.at("name", CONSUMES_KIND):
            kind_tok = s.advance()
            tag_tok = s.expect("name", "a gap list tag")
            if tag_tok.text not in GAP_TAGS:
                raise s.error(f"Unknown gap list {tag_tok.text!r}, "
                              f"expected one of {', '.join(GAP_TAGS)}",
                              tag_tok)
            if kind_tok.text == ADDS_KIND:
                gap_role = GapRole(ADDS_KIND, tag_tok.text, self._phrase())
            else:
                gap_role = GapRole(CONSUMES_KIND, tag_tok.text)
        sem = self._sem()
        self.rules.append(UGRule(id_tok.text, lhs, tuple(rhs), sem, gap_role,
                                 keyword.line))

    def _lex(self, keyword: Token):
        s = self.stream
        word_tok = s.expect("string", "a quoted word")
        if not word_tok.text or any(c.isspace() for c in word_tok.text):
            raise s.error("A word must be non-empty and without spaces",
                          word_tok)
        s.expect_punct(":")
        phrase = self._phrase()
        sem = self._sem()
        self.lexicon.append(LexEntry(len(self.lexicon), word_tok.text,
                                     phrase, sem, keyword.line))


def _check_ground(grammar: Grammar, phrase: Term, where: str):
    assert isinstance(phrase, Struct)
    decl = grammar.categories[phrase.functor]
    for i in decl.distinguishing_positions:
        if not is_ground(phrase.args[i]):
            raise GrammarValidationError(
                f"Distinguishing feature {decl.features[i]!r} not ground "
                f"in {where}")


def _validate(grammar: Grammar):
    if grammar.categories[grammar.top].distinguishing:
        raise GrammarValidationError(
            f"Top category {grammar.top!r} may not have distinguishing "
            f"features")

    seen_ids: Dict[str, UGRule] = {}
    phrasal: Dict[str, int] = {}
    for rule in grammar.rules:
        where = f"rule {rule.id} (line {rule.line})"
        if rule.id in seen_ids:
            raise GrammarValidationError(f"Duplicate rule id in {where}")
        seen_ids[rule.id] = rule
        for phrase in (rule.lhs, *rule.rhs):
            _check_ground(grammar, phrase, where)
        if rule.gap_role.phrase is not None:
            _check_ground(grammar, rule.gap_role.phrase, where)
        if not rule.rhs and not rule.gap_role.consumes:
            raise GrammarValidationError(
                f"Empty production without consumes tag in {where}")
        if rule.rhs and rule.gap_role.consumes:
            raise GrammarValidationError(
                f"Only an empty production may consume a gap, in {where}")
        if rule.sem is not None and (not isinstance(rule.sem, Struct)
                                     or rule.sem.arity != len(rule.rhs) + 1):
            raise GrammarValidationError(
                f"Semantics of {where} must be a compound with "
                f"{len(rule.rhs) + 1} arguments: the mother meaning, then "
                f"one per daughter")
        assert isinstance(rule.lhs, Struct)
        phrasal.setdefault(rule.lhs.functor, rule.line)

    for entry in grammar.lexicon:
        where = f"lexical entry {entry.word!r} (line {entry.line})"
        _check_ground(grammar, entry.phrase, where)
        assert isinstance(entry.phrase, Struct)
        if entry.phrase.functor in phrasal:
            raise GrammarValidationError(
                f"Category {entry.phrase.functor!r} is lexical in {where} "
                f"and phrasal in the rule at line "
                f"{phrasal[entry.phrase.functor]}")

    if grammar.top not in phrasal \
            and grammar.top not in grammar.lexical_categories:
        raise GrammarValidationError(
            f"Nothing derives the top category {grammar.top!r}")

    # the runtime tells empty productions apart by their CF symbol, so the
    # gap list they consume must be fixed per symbol
    tags: Dict[Term, Tuple[str, UGRule]] = {}
    for rule in grammar.rules:
        if rule.rhs:
            continue
        cf = map_to_cf(rule.lhs, grammar.categories)
        assert rule.gap_role.tag is not None
        prev = tags.setdefault(cf, (rule.gap_role.tag, rule))
        if prev[0] != rule.gap_role.tag:
            raise GrammarValidationError(
                f"Empty productions {prev[1].id} and {rule.id} of "
                f"{format_term(cf)} consume different gap lists")


def load_grammar(source: str) -> Grammar:
    return _Loader(source).load()


def load_grammar_file(path: Union[str, Path]) -> Grammar:
    return load_grammar(Path(path).read_text(encoding="utf-8"))


def _fmt_statement(terms: Tuple[Term, ...],
                   grammar: Grammar) -> List[str]:
    # variables are numbered per statement, so equal grammars print equally
    renamed = canonical(Struct("", terms), prefix="V")
    assert isinstance(renamed, Struct)
    return [format_term(t, grammar.features) for t in renamed.args]


def format_grammar(grammar: Grammar) -> str:
    """Canonical grammar file text. Loading it back gives an equal grammar
    up to variable names."""
    lines: List[str] = []
    for decl in grammar.categories.values():
        line = f"category {format_atom(decl.name)}"
        if decl.features:
            line += f" features [{', '.join(decl.features)}]"
        if decl.distinguishing:
            line += f" distinguish [{', '.join(decl.distinguishing)}]"
        lines.append(line + ".")
    lines.append(f"top {format_atom(grammar.top)}.")
    for rule in grammar.rules:
        terms: List[Term] = [rule.lhs, *rule.rhs]
        if rule.gap_role.phrase is not None:
            terms.append(rule.gap_role.phrase)
        if rule.sem is not None:
            terms.append(rule.sem)
        printed = _fmt_statement(tuple(terms), grammar)
        lhs, rhs = printed[0], printed[1:1 + len(rule.rhs)]
        rest = printed[1 + len(rule.rhs):]
        line = f"rule {format_atom(rule.id)}: {lhs} => [{', '.join(rhs)}]"
        if rule.gap_role.adds:
            line += f" adds {rule.gap_role.tag} {rest.pop(0)}"
        elif rule.gap_role.consumes:
            line += f" consumes {rule.gap_role.tag}"
        if rule.sem is not None:
            line += f" sem {rest.pop(0)}"
        lines.append(line + ".")
    for entry in grammar.lexicon:
        terms = [entry.phrase]
        if entry.sem is not None:
            terms.append(entry.sem)
        printed = _fmt_statement(tuple(terms), grammar)
        line = f"lex {format_string(entry.word)}: {printed[0]}"
        if entry.sem is not None:
            line += f" sem {printed[1]}"
        lines.append(line + ".")
    return "\n".join(lines) + "\n"
