# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


import unittest

from lrug._common import GrammarSyntaxError
from lrug.a_terms import Var, Struct, atom, parse_term, format_term, \
    format_atom, tokenize, variant, canonical


class TestParseTerm(unittest.TestCase):

    def test_compound(self):
        t = parse_term("f(X, g(a), X)")
        self.assertEqual(t, Struct("f", (Var("X"), Struct("g", (atom("a"),)),
                                         Var("X"))))

    def test_anonymous_variables_are_distinct(self):
        t = parse_term("f(_, _)")
        assert isinstance(t, Struct)
        self.assertNotEqual(t.args[0], t.args[1])

    def test_quoted_atom(self):
        self.assertEqual(parse_term("'$end'"), atom("$end"))
        self.assertEqual(parse_term(r"'it\'s'"), atom("it's"))

    def test_numbers_are_atoms(self):
        self.assertEqual(parse_term("f(42)"), Struct("f", (atom("42"),)))

    def test_sugar(self):
        features = {"v": ("agr", "sub")}
        t = parse_term("v:[sub=tran]", features)
        assert isinstance(t, Struct)
        self.assertEqual(t.functor, "v")
        self.assertIsInstance(t.args[0], Var)
        self.assertEqual(t.args[1], atom("tran"))

    def test_sugar_shares_variables(self):
        features = {"vp": ("agr",), "v": ("agr", "sub")}
        t = parse_term("r(vp:[agr=A], v:[agr=A,sub=intran])", features)
        self.assertTrue(variant(t, parse_term("r(vp(A), v(A,intran))")))

    def test_sugar_errors(self):
        features = {"v": ("agr", "sub")}
        for text in ("v:[tense=past]", "v:[agr=sg,agr=pl]", "w:[agr=sg]",
                     "v:[agr=sg"):
            with self.subTest(text):
                with self.assertRaises(GrammarSyntaxError):
                    parse_term(text, features)

    def test_error_position(self):
        with self.assertRaises(GrammarSyntaxError) as ctx:
            parse_term("f(a,\n  ]")
        self.assertEqual(ctx.exception.line, 2)
        self.assertEqual(ctx.exception.column, 3)

    def test_trailing_garbage(self):
        with self.assertRaises(GrammarSyntaxError):
            parse_term("f(a) b")

    def test_bad_character(self):
        with self.assertRaises(GrammarSyntaxError):
            tokenize("f(a) # b")

    def test_comments_skipped(self):
        kinds = [t.kind for t in tokenize("a % comment\n b")]
        self.assertEqual(kinds, ["name", "name", "eof"])


class TestFormatTerm(unittest.TestCase):

    def test_plain(self):
        self.assertEqual(format_term(parse_term("f(X,g(a),'$end')")),
                         "f(X,g(a),'$end')")

    def test_sugar(self):
        features = {"v": ("agr", "sub"), "det": ()}
        t = canonical(parse_term("v(A, tran)"))
        self.assertEqual(format_term(t, features), "v:[agr=_0,sub=tran]")
        self.assertEqual(format_term(atom("det"), features), "det")

    def test_arity_mismatch_not_sugared(self):
        features = {"v": ("agr", "sub")}
        self.assertEqual(format_term(parse_term("v(a)"), features), "v(a)")

    def test_atoms(self):
        self.assertEqual(format_atom("np"), "np")
        self.assertEqual(format_atom("Np"), "'Np'")
        self.assertEqual(format_atom("$start"), "'$start'")

    def test_reparse(self):
        for text in ("f(X,Y,X)", "g('a b',c)", "'=>'"):
            with self.subTest(text):
                self.assertEqual(format_term(parse_term(text)), text)


if __name__ == "__main__":
    unittest.main()
