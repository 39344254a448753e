"""Step and backtrack counts of the parsing modes on the test grammars.

Run from the project root: `python -m experiments.bench_modes`."""

from typing import List, Tuple

from lrug import Pipeline, ParseOptions, compile_tables, load_grammar
from lrug._common import StepLimitExceeded
from lrug.c_tables import MODES
from lrug.d_runtime import FULL_UG, CF_SYMBOLS, BACK_CHECK_ALL, \
    BACK_CHECK_OFF
from tests.common import AGREEMENT_GRAMMAR, ASSIGNMENT_GRAMMAR, \
    MOVEMENT_GRAMMAR, VERB_GRAMMAR, TOY_GRAMMAR, TWO_FILLER_GRAMMAR

CASES: List[Tuple[str, str, List[str]]] = [
    ("toy", TOY_GRAMMAR, ["pron v det n prep det n",
                          "pron v pron prep pron prep pron"]),
    ("verb", VERB_GRAMMAR, ["he gives he they", "they sees he"]),
    ("assignment", ASSIGNMENT_GRAMMAR, ["x = x", "* x = * * x"]),
    ("agreement", AGREEMENT_GRAMMAR, ["the sheep walks", "the water walk"]),
    ("movement", MOVEMENT_GRAMMAR, ["what does john seek"]),
    ("two-filler", TWO_FILLER_GRAMMAR, ["what sees john"]),
]

VARIANTS = [
    ("generalized", ParseOptions(max_steps=50_000)),
    ("no-intersect", ParseOptions(max_steps=50_000, intersect=False)),
    ("full-ug", ParseOptions(max_steps=50_000, symbols=FULL_UG)),
    ("cf-symbols", ParseOptions(max_steps=50_000, symbols=CF_SYMBOLS)),
    ("check-all", ParseOptions(max_steps=50_000,
                               back_check=BACK_CHECK_ALL)),
    ("check-off", ParseOptions(max_steps=50_000,
                               back_check=BACK_CHECK_OFF)),
]


def main():
    print(f"{'grammar':<11} {'mode':<5} {'variant':<13} "
          f"{'trees':>5} {'analyses':>8} {'steps':>7} {'backtr':>7}")
    for name, text, sentences in CASES:
        grammar = load_grammar(text)
        for mode in MODES:
            tables = compile_tables(grammar, mode)
            for variant, options in VARIANTS:
                trees = analyses = steps = backtracks = 0
                limited = False
                for sentence in sentences:
                    pipeline = Pipeline(tables, options)
                    try:
                        trees += sum(1 for _ in pipeline.trees(sentence))
                    except StepLimitExceeded:
                        limited = True
                    steps += pipeline.stats.steps
                    backtracks += pipeline.stats.backtracks
                    try:
                        analyses += sum(1 for _ in Pipeline(
                            tables, options, phase=2).analyses(sentence))
                    except StepLimitExceeded:
                        limited = True
                print(f"{name:<11} {mode:<5} {variant:<13} "
                      f"{trees:>5} {analyses:>8} {steps:>7} {backtracks:>7}"
                      + (" step-limit" if limited else ""))


if __name__ == "__main__":
    main()
