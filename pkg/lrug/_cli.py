# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Optional, Tuple

import click

from lrug._common import DEFAULT_MAX_STEPS, GrammarSyntaxError, \
    GrammarValidationError, TableFormatError, LexicalError
from lrug._main import Main, Pipeline, compare_with_oracle, PHASES, \
    NoParsesExit, LexicalErrorExit, StepLimitExit, BadInputExit, \
    MismatchExit, InternalErrorExit, STATUS_NO_PARSES, STATUS_STEP_LIMIT
from lrug.b_grammar import format_grammar
from lrug.c_tables import MODES, SLR, compile_tables
from lrug.d_runtime import ParseOptions, BACK_CHECK_MODES, BACK_CHECK_GAPS, \
    GENERALIZED, FULL_UG, CF_SYMBOLS
from ._constants import __version__, __copyright__, __build_timestamp__

log = logging.getLogger(__name__)

TABLE_MODE_ENVNAME = 'LRUG_TABLE_MODE'
MAX_STEPS_ENVNAME = 'LRUG_MAX_STEPS'


@contextmanager
def _exits_on_errors():
    try:
        yield
    except (GrammarSyntaxError, GrammarValidationError,
            TableFormatError) as e:
        click.echo(f"Error: {e}", err=True)
        raise BadInputExit()
    except OSError as e:
        click.echo(f"Error: {e}", err=True)
        raise BadInputExit()
    except LexicalError as e:
        click.echo(f"Error: {e}", err=True)
        raise LexicalErrorExit()
    except Exception as e:
        log.debug("Unexpected error", exc_info=True)
        click.echo(f"Internal error: {type(e).__name__}: {e}", err=True)
        raise InternalErrorExit()


def _setup_logging(verbose: int):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, force=True,
                        format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("lrug").setLevel(level)


@click.group()
@click.option('-v', '--verbose', count=True,
              help="Log progress to stderr (twice for debug output).")
@click.version_option(
    __version__,
    message=f"lrug: LR parsing of unification grammars v{__version__}\n"
            f"(c) {__copyright__} | {__build_timestamp__}")
def lrug_cli(verbose: int):
    _setup_logging(verbose)


@lrug_cli.command(name='compile')
@click.argument('grammar', type=Path)
@click.argument('out', type=Path)
@click.option('--mode', type=click.Choice(MODES), default=SLR,
              envvar=TABLE_MODE_ENVNAME, show_default=True,
              help="Lookahead computation.")
@click.option('--no-ug-check', is_flag=True,
              help="Predict items by CF symbols alone.")
def compile_cmd(grammar: Path, out: Path, mode: str, no_ug_check: bool):
    """Compile a grammar file to a table file."""
    with _exits_on_errors():
        tables = Main().compile(grammar, out, mode, not no_ug_check)
    st = tables.stats
    click.echo(f"{len(tables.states)} states, {st.transitions} transitions, "
               f"{st.shift_reduce} shift-reduce and {st.reduce_reduce} "
               f"reduce-reduce conflicts ({tables.mode})")


def _parse_options(max_steps: int, back_check: str, no_intersect: bool,
                   use_full_ug: bool, cf_symbols: bool) -> ParseOptions:
    if use_full_ug and cf_symbols:
        raise click.BadParameter(
            "--use-full-ug and --cf-symbols are exclusive")
    symbols = GENERALIZED
    if use_full_ug:
        symbols = FULL_UG
    elif cf_symbols:
        symbols = CF_SYMBOLS
    return ParseOptions(max_steps=max_steps, intersect=not no_intersect,
                        back_check=back_check, symbols=symbols)


@lrug_cli.command(name='parse')
@click.argument('tables_file', metavar='TABLES', type=Path)
@click.argument('sentence', nargs=-1, required=True)
@click.option('-n', '--max-solutions', type=click.IntRange(min=1),
              default=None, help="Stop after this many outputs.")
@click.option('--max-steps', type=click.IntRange(min=1),
              default=DEFAULT_MAX_STEPS, envvar=MAX_STEPS_ENVNAME,
              show_default=True,
              help="Give up after exploring this many configurations.")
@click.option('--phase', type=click.IntRange(min=PHASES[0], max=PHASES[-1]),
              default=1, show_default=True,
              help="1: CF trees; 2: with rule choices; 3: with meanings.")
@click.option('--back-check', type=click.Choice(BACK_CHECK_MODES),
              default=BACK_CHECK_GAPS, show_default=True)
@click.option('--no-intersect', is_flag=True,
              help="Keep the lookahead set unchanged on reduces.")
@click.option('--use-full-ug', is_flag=True,
              help="Check the UG rules themselves instead of the "
                   "generalized ones.")
@click.option('--cf-symbols', is_flag=True,
              help="Parse with CF symbols only; ignores gaps.")
@click.option('--dedupe', is_flag=True,
              help="Drop analyses equal up to rule choices.")
def parse_cmd(tables_file: Path, sentence: Tuple[str, ...],
              max_solutions: Optional[int], max_steps: int, phase: int,
              back_check: str, no_intersect: bool, use_full_ug: bool,
              cf_symbols: bool, dedupe: bool):
    """Parse a sentence: print one analysis per line and a report line."""
    options = _parse_options(max_steps, back_check, no_intersect,
                             use_full_ug, cf_symbols)
    with _exits_on_errors():
        tables = Main().load_tables(tables_file)
        result = Pipeline(tables, options, phase, dedupe) \
            .run(" ".join(sentence), max_solutions)
    for line in result.lines:
        click.echo(line)
    click.echo(result.report.format())
    if result.report.status == STATUS_STEP_LIMIT:
        raise StepLimitExit()
    if result.report.status == STATUS_NO_PARSES:
        raise NoParsesExit()


@lrug_cli.command(name='dump-states')
@click.argument('tables_file', metavar='TABLES', type=Path)
def dump_states_cmd(tables_file: Path):
    """Print the item sets of all states."""
    with _exits_on_errors():
        text = Main().dump_states(tables_file)
    click.echo(text, nl=not text.endswith("\n"))


@lrug_cli.command(name='oracle-compare')
@click.argument('grammar', type=Path)
@click.argument('sentences', type=Path)
@click.option('--tables', 'tables_file', type=Path, default=None,
              help="Compiled tables of the grammar. Compiled in memory "
                   "if omitted.")
@click.option('--mode', type=click.Choice(MODES), default=SLR,
              envvar=TABLE_MODE_ENVNAME, show_default=True)
@click.option('--max-steps', type=click.IntRange(min=1),
              default=DEFAULT_MAX_STEPS, envvar=MAX_STEPS_ENVNAME,
              show_default=True)
@click.option('--bound', type=click.IntRange(min=1), default=None,
              help="Size limit for oracle derivations with empty "
                   "productions.")
def oracle_compare_cmd(grammar: Path, sentences: Path,
                       tables_file: Optional[Path], mode: str,
                       max_steps: int, bound: Optional[int]):
    """Compare phase-two analyses with a brute-force chart parser."""
    main = Main()
    with _exits_on_errors():
        g = main.load_grammar(grammar)
        if tables_file is not None:
            tables = main.load_tables(tables_file)
            if format_grammar(tables.grammar) != format_grammar(g):
                click.echo(f"Error: {tables_file} was not compiled from "
                           f"{grammar}", err=True)
                raise BadInputExit()
        else:
            tables = compile_tables(g, mode)
        lines = main.read_sentences(sentences)
    options = ParseOptions(max_steps=max_steps)
    mismatches = 0
    with _exits_on_errors():
        for text in lines:
            comparison = compare_with_oracle(tables, text, options, bound)
            for line in comparison.format():
                click.echo(line)
            if not comparison.matches:
                mismatches += 1
    click.echo(f"% {len(lines)} sentences, {mismatches} mismatches")
    if mismatches:
        raise MismatchExit()
