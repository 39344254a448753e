# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


from enum import IntEnum

# names of the reserved CF symbols. They are quoted atoms in the term syntax,
# so they never clash with grammar categories
END_MARKER_NAME = "$end"
START_SYMBOL_NAME = "$start"
START_RULE_ID = "$start"

# the augmented rule S' -> S always gets number zero
AUGMENTED_RULE = 0

GAP_TAGS = ("maxproj", "verb")

DEFAULT_MAX_STEPS = 1_000_000

TABLES_FORMAT_VERSION = 1
TABLES_SIGNATURE = "lrug-tables"


class ExitCode(IntEnum):
    OK = 0
    NO_PARSES = 1
    # 2 is click's usage error
    LEXICAL_ERROR = 3
    STEP_LIMIT = 4
    BAD_INPUT = 5
    MISMATCH = 6
    # an error of lrug itself, never a result of the input
    INTERNAL_ERROR = 7


class LrugError(Exception):
    pass


class GrammarSyntaxError(LrugError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class GrammarValidationError(LrugError):
    pass


class TableFormatError(LrugError):
    pass


class LexicalError(LrugError):
    def __init__(self, word: str, position: int):
        super().__init__(f"Unknown word {word!r} at position {position}")
        self.word = word
        self.position = position


class StepLimitExceeded(LrugError):
    def __init__(self, steps: int):
        super().__init__(f"Step limit exceeded after {steps} configurations")
        self.steps = steps
