# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


import logging
import time
from collections import Counter
from pathlib import Path
from typing import Iterator, List, NamedTuple, Optional, Sequence, Union

from lrug._common import ExitCode, LexicalError, StepLimitExceeded
from lrug.a_terms import Term, canonical, format_term
from lrug.a_utils.dirty_file import write_bytes_atomic
from lrug.b_grammar import Grammar, load_grammar_file
from lrug.c_tables import ParseTables, compile_tables, serialize_tables, \
    deserialize_tables, format_states, SLR
from lrug.d_runtime import LrParser, ParseOptions, ParseStats, Node, \
    format_tree, split_sentence
from lrug.e_constraints import Analysis, phase_two, phase_three, dedupe
from lrug.f_oracle import chart_parse, format_derivation

log = logging.getLogger(__name__)

PHASES = (1, 2, 3)


class LrugExit(SystemExit):
    exit_code = ExitCode.OK

    def __init__(self):
        super().__init__(int(self.exit_code))


class NoParsesExit(LrugExit):
    exit_code = ExitCode.NO_PARSES


class LexicalErrorExit(LrugExit):
    exit_code = ExitCode.LEXICAL_ERROR


class StepLimitExit(LrugExit):
    exit_code = ExitCode.STEP_LIMIT


class BadInputExit(LrugExit):
    exit_code = ExitCode.BAD_INPUT


class MismatchExit(LrugExit):
    exit_code = ExitCode.MISMATCH


class InternalErrorExit(LrugExit):
    exit_code = ExitCode.INTERNAL_ERROR


STATUS_OK = "ok"
STATUS_NO_PARSES = "no-parses"
STATUS_STEP_LIMIT = "step-limit"


class RunReport(NamedTuple):
    sentence: str
    solutions: int
    steps: int
    backtracks: int
    filter_hits: int
    gap_pushes: int
    gap_pops: int
    mode: str
    elapsed: float
    status: str

    def format(self) -> str:
        return (f"% report status={self.status} solutions={self.solutions} "
                f"steps={self.steps} backtracks={self.backtracks} "
                f"filter_hits={self.filter_hits} "
                f"gap_pushes={self.gap_pushes} gap_pops={self.gap_pops} "
                f"mode={self.mode} elapsed={self.elapsed:.3f} "
                f"sentence={self.sentence!r}")


class RunResult(NamedTuple):
    lines: List[str]
    report: RunReport


def format_analysis(a: Analysis, tables: ParseTables) -> str:
    line = f"{format_tree(a.tree, tables.grammar, tables.backbone)}\t" \
           f"{format_term(canonical(a.root_phrase), tables.grammar.features)}"
    if a.meaning is not None:
        line += f"\t{format_term(canonical(a.meaning))}"
    return line


def comparable(tree_text: str, root_phrase: Term) -> str:
    return f"{tree_text}\t{format_term(canonical(root_phrase))}"


class Pipeline:
    """Phase one, optionally followed by phases two and three."""

    def __init__(self, tables: ParseTables,
                 options: ParseOptions = ParseOptions(),
                 phase: int = 1,
                 dedupe: bool = False):
        if phase not in PHASES:
            raise ValueError(f"Unknown phase {phase}")
        self.tables = tables
        self.options = options
        self.phase = phase
        self.dedupe = dedupe
        self.parser = LrParser(tables, options)

    @property
    def stats(self) -> ParseStats:
        return self.parser.stats

    def trees(self, sentence: Union[str, Sequence[str]]) -> Iterator[Node]:
        return self.parser.parse(sentence)

    def analyses(self, sentence: Union[str, Sequence[str]]) \
            -> Iterator[Analysis]:
        g = self.tables.grammar

        def generate() -> Iterator[Analysis]:
            for tree in self.trees(sentence):
                for a in phase_two(tree, g, self.tables.backbone):
                    if self.phase >= 3:
                        yield from phase_three(a, g)
                    else:
                        yield a

        result = generate()
        if self.dedupe:
            result = dedupe(result, g, self.tables.backbone)
        return result

    def outputs(self, sentence: Union[str, Sequence[str]]) -> Iterator[str]:
        if self.phase == 1:
            for tree in self.trees(sentence):
                yield format_tree(tree, self.tables.grammar,
                                  self.tables.backbone)
        else:
            for a in self.analyses(sentence):
                yield format_analysis(a, self.tables)

    def run(self, sentence: Union[str, Sequence[str]],
            max_solutions: Optional[int] = None) -> RunResult:
        """Collects the outputs. Unknown words raise `LexicalError`; the step
        limit is reported in the status, with the outputs found before."""
        text = " ".join(split_sentence(sentence))
        started = time.monotonic()
        lines: List[str] = []
        status = STATUS_OK
        outputs = self.outputs(sentence)
        try:
            for line in outputs:
                lines.append(line)
                if max_solutions is not None and len(lines) >= max_solutions:
                    break
        except StepLimitExceeded as e:
            log.warning("%s", e)
            status = STATUS_STEP_LIMIT
        if status == STATUS_OK and not lines:
            status = STATUS_NO_PARSES
        st = self.stats
        report = RunReport(
            sentence=text, solutions=len(lines), steps=st.steps,
            backtracks=st.backtracks,
            filter_hits=self.tables.stats.filter_hits,
            gap_pushes=st.gap_pushes, gap_pops=st.gap_pops,
            mode=self.tables.mode,
            elapsed=time.monotonic() - started, status=status)
        return RunResult(lines, report)


class Comparison(NamedTuple):
    sentence: str
    pipeline: Counter
    oracle: Counter
    # the oracle was cut by its derivation bound
    incomplete: bool
    step_limit: bool = False

    @property
    def matches(self) -> bool:
        return not self.step_limit and self.pipeline == self.oracle

    def format(self) -> List[str]:
        n_pipe = sum(self.pipeline.values())
        n_oracle = sum(self.oracle.values())
        note = " (oracle possibly incomplete)" if self.incomplete else ""
        if self.step_limit:
            note += " (pipeline hit the step limit)"
        if self.matches:
            return [f"ok {n_pipe} {self.sentence!r}{note}"]
        lines = [f"MISMATCH pipeline={n_pipe} oracle={n_oracle} "
                 f"{self.sentence!r}{note}"]
        for item in sorted((self.pipeline - self.oracle).elements()):
            lines.append(f"  only pipeline: {item}")
        for item in sorted((self.oracle - self.pipeline).elements()):
            lines.append(f"  only oracle:   {item}")
        return lines


def compare_with_oracle(tables: ParseTables,
                        sentence: Union[str, Sequence[str]],
                        options: ParseOptions = ParseOptions(),
                        bound: Optional[int] = None) -> Comparison:
    """Phase-two analyses against the chart parser's derivations, as
    multisets of (tree, root phrase)."""
    g = tables.grammar
    pipeline: Counter = Counter()
    step_limit = False
    try:
        for a in Pipeline(tables, options, phase=2).analyses(sentence):
            pipeline[comparable(format_tree(a.tree, g, tables.backbone),
                                a.root_phrase)] += 1
    except LexicalError:
        pass
    except StepLimitExceeded:
        step_limit = True
    result = chart_parse(g, sentence, bound)
    oracle: Counter = Counter(
        comparable(format_derivation(d, g), phrase)
        for d, phrase in result.derivations)
    return Comparison(" ".join(split_sentence(sentence)), pipeline, oracle,
                      result.incomplete, step_limit)


class Main:
    """The operations behind the command line."""

    def compile(self, grammar_file: Path, out_file: Path, mode: str = SLR,
                ug_check: bool = True) -> ParseTables:
        grammar = load_grammar_file(grammar_file)
        tables = compile_tables(grammar, mode, ug_check)
        write_bytes_atomic(out_file, serialize_tables(tables))
        log.info("Tables written to %s", out_file)
        return tables

    def load_tables(self, tables_file: Path) -> ParseTables:
        return deserialize_tables(tables_file.read_bytes())

    def load_grammar(self, grammar_file: Path) -> Grammar:
        return load_grammar_file(grammar_file)

    def dump_states(self, tables_file: Path) -> str:
        return format_states(self.load_tables(tables_file))

    def read_sentences(self, sentences_file: Path) -> List[str]:
        return [line.strip() for line in
                sentences_file.read_text(encoding="utf-8").splitlines()
                if line.strip() and not line.lstrip().startswith("%")]
