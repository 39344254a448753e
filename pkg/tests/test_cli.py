# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


import unittest
from unittest import mock
from pathlib import Path
from tempfile import TemporaryDirectory

from click.testing import CliRunner

from lrug import lrug_cli, ExitCode, Pipeline, __version__
from lrug._cli import TABLE_MODE_ENVNAME, MAX_STEPS_ENVNAME
from lrug.c_tables import serialize_tables, deserialize_tables
from tests.common import TOY_GRAMMAR, PP_GAP_GRAMMAR, SEM_GRAMMAR, \
    MOVEMENT_GRAMMAR


# noinspection PyTypeChecker
class Test(unittest.TestCase):

    def setUp(self) -> None:
        self._temp_dir_obj = TemporaryDirectory()
        self.temp_dir = Path(self._temp_dir_obj.name)

    def tearDown(self) -> None:
        self._temp_dir_obj.cleanup()

    def write(self, name: str, text: str) -> Path:
        path = self.temp_dir / name
        path.write_text(text, encoding="utf-8")
        return path

    def compiled(self, text: str, *args: str) -> Path:
        grammar = self.write("grammar.ug", text)
        tables = self.temp_dir / "grammar.tables"
        result = CliRunner().invoke(
            lrug_cli, ['compile', str(grammar), str(tables), *args])
        self.assertEqual(result.exit_code, 0, result.output)
        return tables

    def test_version(self):
        result = CliRunner().invoke(lrug_cli, ['--version'])
        self.assertEqual(result.exit_code, 0)
        self.assertIn(f"lrug: LR parsing of unification grammars "
                      f"v{__version__}", result.output)

    def test_compile(self):
        grammar = self.write("toy.ug", TOY_GRAMMAR)
        tables = self.temp_dir / "toy.tables"
        result = CliRunner().invoke(lrug_cli,
                                    ['compile', str(grammar), str(tables)])
        self.assertEqual(result.exit_code, 0)
        self.assertTrue(result.output.startswith("14 states, "))
        self.assertTrue(result.output.strip().endswith("(slr)"))
        self.assertTrue(tables.read_bytes().startswith(b"lrug-tables 1 "))

    def test_compile_mode_from_env(self):
        grammar = self.write("toy.ug", TOY_GRAMMAR)
        tables = self.temp_dir / "toy.tables"
        result = CliRunner().invoke(lrug_cli,
                                    ['compile', str(grammar), str(tables)],
                                    env={TABLE_MODE_ENVNAME: "lalr"})
        self.assertEqual(result.exit_code, 0)
        self.assertTrue(result.output.strip().endswith("(lalr)"))

    def test_compile_bad_grammar(self):
        grammar = self.write("bad.ug", "category s.\ntop s.\nrule r1 s.")
        result = CliRunner().invoke(
            lrug_cli, ['compile', str(grammar),
                       str(self.temp_dir / "out.tables")])
        self.assertEqual(result.exit_code, ExitCode.BAD_INPUT)
        self.assertIn("line 3", result.output)
        self.assertFalse((self.temp_dir / "out.tables").exists())

    def test_compile_missing_grammar(self):
        result = CliRunner().invoke(
            lrug_cli, ['compile', str(self.temp_dir / "none.ug"),
                       str(self.temp_dir / "out.tables")])
        self.assertEqual(result.exit_code, ExitCode.BAD_INPUT)

    def test_parse(self):
        tables = self.compiled(TOY_GRAMMAR)
        result = CliRunner().invoke(lrug_cli,
                                    ['parse', str(tables), 'pron', 'v'])
        self.assertEqual(result.exit_code, 0)
        lines = result.output.splitlines()
        self.assertEqual(lines[0], "(r1 (r7 pron/pron) (r2 v/v))")
        self.assertTrue(lines[1].startswith("% report status=ok "
                                            "solutions=1 "))
        self.assertTrue(lines[1].endswith("sentence='pron v'"))

    def test_parse_quoted_sentence(self):
        tables = self.compiled(TOY_GRAMMAR)
        result = CliRunner().invoke(
            lrug_cli, ['parse', str(tables), 'pron v det n prep det n'])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(len(result.output.splitlines()), 3)

    def test_parse_max_solutions(self):
        tables = self.compiled(TOY_GRAMMAR)
        result = CliRunner().invoke(
            lrug_cli, ['parse', str(tables), '-n', '1',
                       'pron v det n prep det n'])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(len(result.output.splitlines()), 2)

    def test_parse_phase_three(self):
        tables = self.compiled(SEM_GRAMMAR)
        result = CliRunner().invoke(
            lrug_cli, ['parse', str(tables), '--phase', '3', 'john sleeps'])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.splitlines()[0],
                         "(s1 (np1 john/pn) (vp1 sleeps/v))\ts\t"
                         "pred(sleep,john)")

    def test_no_parses(self):
        tables = self.compiled(MOVEMENT_GRAMMAR)
        result = CliRunner().invoke(lrug_cli,
                                    ['parse', str(tables), 'does john seek'])
        self.assertEqual(result.exit_code, ExitCode.NO_PARSES)
        self.assertIn("status=no-parses", result.output)

    def test_unknown_word(self):
        tables = self.compiled(TOY_GRAMMAR)
        result = CliRunner().invoke(lrug_cli,
                                    ['parse', str(tables), 'pron foo'])
        self.assertEqual(result.exit_code, ExitCode.LEXICAL_ERROR)
        self.assertIn("'foo'", result.output)

    def test_step_limit(self):
        tables = self.compiled(PP_GAP_GRAMMAR)
        result = CliRunner().invoke(
            lrug_cli, ['parse', str(tables), '--cf-symbols', 'john runs'],
            env={MAX_STEPS_ENVNAME: "2000"})
        self.assertEqual(result.exit_code, ExitCode.STEP_LIMIT)
        self.assertIn("(s1 (np1 john/pn) (vp1 runs/v))", result.output)
        self.assertIn("status=step-limit", result.output)
        self.assertIn("steps=2001 ", result.output)

    def test_step_limit_phase_two(self):
        tables = self.compiled(PP_GAP_GRAMMAR)
        result = CliRunner().invoke(
            lrug_cli, ['parse', str(tables), '--cf-symbols', '--phase', '2',
                       'john runs'],
            env={MAX_STEPS_ENVNAME: "2000"})
        self.assertEqual(result.exit_code, ExitCode.STEP_LIMIT,
                         result.output)
        self.assertIn("(s1 (np1 john/pn) (vp1 runs/v))\ts", result.output)

    def test_internal_error(self):
        tables = self.compiled(TOY_GRAMMAR)
        with mock.patch.object(Pipeline, "run",
                               side_effect=RuntimeError("broken")):
            result = CliRunner().invoke(lrug_cli,
                                        ['parse', str(tables), 'pron v'])
        self.assertEqual(result.exit_code, ExitCode.INTERNAL_ERROR)
        self.assertIn("Internal error: RuntimeError: broken", result.output)

    def test_exclusive_symbol_flags(self):
        tables = self.compiled(TOY_GRAMMAR)
        result = CliRunner().invoke(
            lrug_cli, ['parse', str(tables), '--use-full-ug', '--cf-symbols',
                       'pron v'])
        self.assertEqual(result.exit_code, 2)

    def test_corrupted_tables(self):
        tables = self.compiled(TOY_GRAMMAR)
        data = bytearray(tables.read_bytes())
        data[-3] ^= 1
        tables.write_bytes(bytes(data))
        for args in (['parse', str(tables), 'pron v'],
                     ['dump-states', str(tables)]):
            with self.subTest(args[0]):
                result = CliRunner().invoke(lrug_cli, args)
                self.assertEqual(result.exit_code, ExitCode.BAD_INPUT)
                self.assertIn("Checksum", result.output)

    def test_dump_states(self):
        tables = self.compiled(TOY_GRAMMAR, '--mode', 'lalr')
        result = CliRunner().invoke(lrug_cli, ['dump-states', str(tables)])
        self.assertEqual(result.exit_code, 0)
        self.assertTrue(result.output.startswith("% lalr tables: 14 states"))
        self.assertIn("  S' → · S", result.output.splitlines())

    def test_oracle_compare(self):
        grammar = self.write("toy.ug", TOY_GRAMMAR)
        sentences = self.write("sentences.txt",
                               "% toy sentences\npron v\n\ndet det\n")
        result = CliRunner().invoke(
            lrug_cli, ['oracle-compare', str(grammar), str(sentences)])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.splitlines(),
                         ["ok 1 'pron v'", "ok 0 'det det'",
                          "% 2 sentences, 0 mismatches"])

    def test_oracle_compare_with_tables(self):
        tables = self.compiled(TOY_GRAMMAR)
        sentences = self.write("sentences.txt", "pron v\n")
        grammar = self.temp_dir / "grammar.ug"
        result = CliRunner().invoke(
            lrug_cli, ['oracle-compare', str(grammar), str(sentences),
                       '--tables', str(tables)])
        self.assertEqual(result.exit_code, 0)

        other = self.write("other.ug", SEM_GRAMMAR)
        result = CliRunner().invoke(
            lrug_cli, ['oracle-compare', str(other), str(sentences),
                       '--tables', str(tables)])
        self.assertEqual(result.exit_code, ExitCode.BAD_INPUT)

    def test_oracle_mismatch(self):
        grammar = self.write("pp.ug", PP_GAP_GRAMMAR)
        sentences = self.write("sentences.txt", "john runs\n")
        result = CliRunner().invoke(
            lrug_cli, ['oracle-compare', str(grammar), str(sentences)])
        self.assertEqual(result.exit_code, ExitCode.MISMATCH)
        self.assertIn("MISMATCH pipeline=1 ", result.output)
        self.assertTrue(result.output.strip().endswith(
            "% 1 sentences, 1 mismatches"))

    def test_oracle_detects_broken_tables(self):
        tables_file = self.compiled(TOY_GRAMMAR)
        tables = deserialize_tables(tables_file.read_bytes())
        # no state may reduce NP → PRON any more
        for row in tables.reduces.values():
            row.pop(7, None)
        tables_file.write_bytes(serialize_tables(tables))
        sentences = self.write("sentences.txt", "pron v\ndet n v\n")
        result = CliRunner().invoke(
            lrug_cli, ['oracle-compare', str(self.temp_dir / "grammar.ug"),
                       str(sentences), '--tables', str(tables_file)])
        self.assertEqual(result.exit_code, ExitCode.MISMATCH)
        lines = result.output.splitlines()
        self.assertIn("MISMATCH pipeline=0 oracle=1 'pron v'", lines)
        self.assertIn("ok 1 'det n v'", lines)
        self.assertEqual(lines[-1], "% 2 sentences, 1 mismatches")


if __name__ == "__main__":
    unittest.main()
