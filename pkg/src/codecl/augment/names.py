"""Identifier vocabularies harvested from a corpus, and fresh-name generation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ..frontend import AstFunction


@dataclass
class NameVocabulary:
    """Function and variable names seen across the corpus.

    Renaming operators draw replacement names from here so that mutated
    programs stay within the corpus's identifier distribution.
    """

    function_names: set[str] = field(default_factory=set)
    variable_names: set[str] = field(default_factory=set)

    @classmethod
    def harvest(cls, functions: Iterable[AstFunction]) -> "NameVocabulary":
        vocab = cls()
        for fn in functions:
            vocab.function_names.add(fn.name)
            vocab.variable_names.update(fn.variables)
        return vocab


def fresh_names(prefix: str, taken: set[str]) -> Iterator[str]:
    """Yield `<prefix>0`, `<prefix>1`, ... skipping anything in `taken`.

    Names yielded are added to `taken` so one generator instance never
    repeats itself.
    """
    i = 0
    while True:
        candidate = f"{prefix}{i}"
        i += 1
        if candidate in taken:
            continue
        taken.add(candidate)
        yield candidate
