# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT


from typing import Dict, FrozenSet, List, Sequence, Union

from lrug._common import LexicalError
from lrug.a_terms import Term
from lrug.b_grammar import GeneralizedLexeme
from lrug.c_tables import ParseTables, END_MARKER


def lexemes_by_word(tables: ParseTables) \
        -> Dict[str, List[GeneralizedLexeme]]:
    result: Dict[str, List[GeneralizedLexeme]] = {}
    for lexeme in tables.lexemes.values():
        result.setdefault(lexeme.word, []).append(lexeme)
    return result


def lex_all(word: str, tables: ParseTables, position: int = 0) \
        -> List[GeneralizedLexeme]:
    """One generalized lexeme per CF symbol the word maps to."""
    found = [lx for lx in tables.lexemes.values() if lx.word == word]
    if not found:
        raise LexicalError(word, position)
    return found


def split_sentence(sentence: Union[str, Sequence[str]]) -> List[str]:
    if isinstance(sentence, str):
        return sentence.split()
    return list(sentence)


class LexedInput:
    """The words of a sentence with their lexemes. Unknown words are
    reported on construction, before any parsing starts."""

    def __init__(self, tables: ParseTables,
                 sentence: Union[str, Sequence[str]]):
        self.words = split_sentence(sentence)
        index = lexemes_by_word(tables)
        self.lexemes: List[List[GeneralizedLexeme]] = []
        for position, word in enumerate(self.words):
            found = index.get(word)
            if not found:
                raise LexicalError(word, position)
            self.lexemes.append(found)
        self._sets: List[FrozenSet[Term]] = [
            frozenset(lx.cf for lx in found) for found in self.lexemes]
        self._sets.append(frozenset([END_MARKER]))

    def __len__(self):
        return len(self.words)

    def lookahead_set(self, position: int) -> FrozenSet[Term]:
        """CF symbols the word at `position` may have; `$end` past the
        last word."""
        return self._sets[position]
