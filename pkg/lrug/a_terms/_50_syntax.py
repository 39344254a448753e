# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


"""Textual term syntax.

    functor(arg1, ..., argN)    compound
    name  'any text'  42        atoms
    Agr  _Tail  _               variables (`_` is anonymous)
    cat:[f1=V1, f2=V2]          feature sugar, needs a category declaration

The tokenizer is shared with the grammar file reader."""

import re
from typing import Dict, List, Mapping, NamedTuple, Optional, \
    Sequence

from lrug._common import GrammarSyntaxError
from lrug.a_terms._10_term import Term, Var, Struct, fresh_var


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(r"""
    (?P<space>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<comment>%[^\n]*)
  | (?P<arrow>=>)
  | (?P<name>[a-z0-9][A-Za-z0-9_]*)
  | (?P<var>[A-Z_][A-Za-z0-9_]*)
  | (?P<qatom>'(?:[^'\\\n]|\\.)*')
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<punct>[()\[\],:=.])
""", re.VERBOSE)

_BARE_ATOM_RE = re.compile(r"[a-z0-9][A-Za-z0-9_]*\Z")


def _unquote(text: str) -> str:
    return re.sub(r"\\(.)", r"\1", text[1:-1])


def _quote(text: str, quote: str) -> str:
    escaped = text.replace("\\", "\\\\").replace(quote, "\\" + quote)
    return f"{quote}{escaped}{quote}"


def tokenize(source: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise GrammarSyntaxError(f"Unexpected character {source[pos]!r}",
                                     line, pos - line_start + 1)
        kind = m.lastgroup
        assert kind is not None
        if kind == "newline":
            line += 1
            line_start = m.end()
        elif kind not in ("space", "comment"):
            text = m.group()
            if kind in ("qatom", "string"):
                text = _unquote(text)
            tokens.append(Token(kind, text, line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# maps a category name to its feature names in declared order
FeatureTable = Mapping[str, Sequence[str]]


class TokenStream:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        idx = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[idx]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, message: str, tok: Optional[Token] = None) \
            -> GrammarSyntaxError:
        tok = tok or self.current
        return GrammarSyntaxError(message, tok.line, tok.column)

    def at(self, kind: str, text: Optional[str] = None) -> bool:
        tok = self.current
        return tok.kind == kind and (text is None or tok.text == text)

    def at_punct(self, text: str) -> bool:
        return self.at("punct", text)

    def expect_punct(self, text: str) -> Token:
        if not self.at_punct(text):
            raise self.error(f"Expected {text!r}, found {self.describe()}")
        return self.advance()

    def expect(self, kind: str, what: str) -> Token:
        if not self.at(kind):
            raise self.error(f"Expected {what}, found {self.describe()}")
        return self.advance()

    def describe(self) -> str:
        tok = self.current
        if tok.kind == "eof":
            return "end of input"
        return repr(tok.text)


class TermReader:
    """Reads terms from a token stream. Variable names are scoped: call
    `new_scope` between independent clauses."""

    def __init__(self, stream: TokenStream,
                 features: Optional[FeatureTable] = None):
        self.stream = stream
        self.features = features
        self.variables: Dict[str, Var] = {}

    def new_scope(self):
        self.variables = {}

    def read(self) -> Term:
        s = self.stream
        tok = s.current
        if tok.kind == "var":
            s.advance()
            if tok.text == "_":
                return fresh_var()
            var = self.variables.get(tok.text)
            if var is None:
                var = Var(tok.text)
                self.variables[tok.text] = var
            return var
        if tok.kind not in ("name", "qatom"):
            raise s.error(f"Expected a term, found {s.describe()}")
        s.advance()
        functor = tok.text
        if tok.kind == "name" and s.at_punct(":") \
                and s.peek().kind == "punct" and s.peek().text == "[":
            return self._read_sugar(tok)
        if s.at_punct("("):
            s.advance()
            args = [self.read()]
            while s.at_punct(","):
                s.advance()
                args.append(self.read())
            s.expect_punct(")")
            return Struct(functor, tuple(args))
        return Struct(functor, ())

    def _read_sugar(self, cat_tok: Token) -> Term:
        s = self.stream
        if self.features is None or cat_tok.text not in self.features:
            raise s.error(f"Undeclared category {cat_tok.text!r}", cat_tok)
        declared = list(self.features[cat_tok.text])
        s.expect_punct(":")
        s.expect_punct("[")
        values: Dict[str, Term] = {}
        if not s.at_punct("]"):
            while True:
                name_tok = s.expect("name", "a feature name")
                if name_tok.text not in declared:
                    raise s.error(f"Category {cat_tok.text!r} has no feature "
                                  f"{name_tok.text!r}", name_tok)
                if name_tok.text in values:
                    raise s.error(f"Feature {name_tok.text!r} given twice",
                                  name_tok)
                s.expect_punct("=")
                values[name_tok.text] = self.read()
                if not s.at_punct(","):
                    break
                s.advance()
        s.expect_punct("]")
        args = tuple(values[f] if f in values else fresh_var()
                     for f in declared)
        return Struct(cat_tok.text, args)


def parse_term(text: str, features: Optional[FeatureTable] = None) -> Term:
    stream = TokenStream(tokenize(text))
    term = TermReader(stream, features).read()
    if not stream.at("eof"):
        raise stream.error(f"Unexpected {stream.describe()} after term")
    return term


def format_atom(name: str) -> str:
    if _BARE_ATOM_RE.match(name):
        return name
    return _quote(name, "'")


def format_string(text: str) -> str:
    return _quote(text, '"')


def format_term(term: Term, features: Optional[FeatureTable] = None) -> str:
    """Prints the term. With `features`, compounds of declared categories are
    printed in sugared form; zero-feature categories print as bare atoms."""

    def fmt(t: Term) -> str:
        if isinstance(t, Var):
            return t.name
        functor = format_atom(t.functor)
        if features is not None and t.functor in features \
                and len(features[t.functor]) == len(t.args):
            if not t.args:
                return functor
            pairs = ','.join(f'{f}={fmt(a)}'
                             for f, a in zip(features[t.functor], t.args))
            return f'{functor}:[{pairs}]'
        if not t.args:
            return functor
        return f"{functor}({','.join(fmt(a) for a in t.args)})"

    return fmt(term)
