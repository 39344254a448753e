from ._constants import __version__
from ._common import ExitCode, LrugError, GrammarSyntaxError, \
    GrammarValidationError, TableFormatError, LexicalError, StepLimitExceeded
from .b_grammar import Grammar, load_grammar, load_grammar_file
from .c_tables import ParseTables, compile_tables, serialize_tables, \
    deserialize_tables
from .d_runtime import LrParser, ParseOptions, parse
from ._main import Pipeline, RunReport, compare_with_oracle
from ._cli import lrug_cli
