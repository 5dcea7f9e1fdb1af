"""The nine semantics-preserving augmentation operators, and the renaming attack.

Program operators (on the AST): rename-function-name, rename-variables,
insert-dead-code, reorder, statement-drop. Comment operators (on the word
list): round-trip translation, word delete, word switch, word copy.

Every operator is a pure function of (input, seed): the same seed always
yields the same variant. Operators that cannot apply to a given input
(no assignment to clone, no swappable pair, nothing deletable) return
None rather than raising; `build_sets` simply skips those.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import CodeclError
from ..frontend import (
    AstFunction,
    Block,
    Comment,
    Declaration,
    all_identifiers,
    basic_blocks,
    iter_blocks,
    rename_identifiers,
    replace_statement,
    swappable,
)
from ..frontend.ast import statement_tokens_with_roles
from .names import NameVocabulary, fresh_names
from .translate import Translator, TranslatorUnavailableError

PROGRAM_OPERATORS = ("rfn", "rv", "idc", "ro", "sp")
COMMENT_OPERATORS = ("trans", "delete", "switch", "copy")
ALL_OPERATORS = PROGRAM_OPERATORS + COMMENT_OPERATORS


class NoVariablesError(CodeclError):
    """The function declares and uses no variables, so nothing can be renamed."""


class TooShortError(CodeclError):
    """The comment has too few words for the requested operator."""


@dataclass
class AugmentationSet:
    """Variants of one (function, comment) pair, one per applicable operator."""

    program_variants: list[tuple[str, AstFunction]] = field(default_factory=list)
    comment_variants: list[tuple[str, Comment]] = field(default_factory=list)


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def _pick(rng: np.random.Generator, items):
    return items[int(rng.integers(len(items)))]


# ---------------------------------------------------------------------------
# Program operators
# ---------------------------------------------------------------------------

def rfn(fn: AstFunction, vocab: NameVocabulary, rng) -> AstFunction:
    """Replace the function's name (including recursive self-calls) with a
    different name from the harvested vocabulary."""
    rng = _rng(rng)
    candidates = sorted(vocab.function_names - {fn.name})
    if candidates:
        new_name = _pick(rng, candidates)
    else:
        new_name = next(fresh_names("_f", all_identifiers(fn)))
    return rename_identifiers(fn, fn_map={fn.name: new_name})


def _draw_replacements(rng: np.random.Generator, count: int, pool: list[str],
                       taken: set[str]) -> list[str]:
    """`count` distinct new names: from `pool` first, generated after."""
    if len(pool) >= count:
        idx = rng.choice(len(pool), size=count, replace=False)
        return [pool[int(i)] for i in idx]
    names = list(pool)
    taken = taken | set(names)
    gen = fresh_names("_v", taken)
    while len(names) < count:
        names.append(next(gen))
    return names


def rv(fn: AstFunction, vocab: NameVocabulary, rng) -> AstFunction:
    """Rename a random number of variables, each at all its occurrences,
    with vocabulary names not already present in the function."""
    rng = _rng(rng)
    variables = fn.variables
    if not variables:
        raise NoVariablesError(f"function {fn.name!r} has no variables")
    k = int(rng.integers(1, len(variables) + 1))
    chosen_idx = sorted(int(i) for i in rng.choice(len(variables), size=k, replace=False))
    present = all_identifiers(fn)
    pool = sorted(vocab.variable_names - present)
    replacements = _draw_replacements(rng, k, pool, present)
    var_map = {variables[i]: new for i, new in zip(chosen_idx, replacements)}
    return rename_identifiers(fn, var_map=var_map)


def _assignment_sites(fn: AstFunction) -> list[tuple[Block, int]]:
    sites = []
    for block in iter_blocks(fn):
        for i, stmt in enumerate(block.statements):
            if stmt.kind == "assignment":
                sites.append((block, i))
    return sites


def idc(fn: AstFunction, rng) -> AstFunction | None:
    """Insert dead code: clone one assignment, rename every variable in
    the clone to names never seen in the function, and place the clone
    (with declarations for the new names) right after the original.

    Returns None when the function contains no assignment statement.
    """
    rng = _rng(rng)
    sites = _assignment_sites(fn)
    if not sites:
        return None
    block, i = sites[int(rng.integers(len(sites)))]
    original = block.statements[i]

    in_order = []
    for text, role in statement_tokens_with_roles(original):
        if role in ("def", "use") and text not in in_order:
            in_order.append(text)
    gen = fresh_names("_d", all_identifiers(fn))
    var_map = {name: next(gen) for name in in_order}

    clone = rename_identifiers(
        AstFunction("void", "_", (), Block((original,))), var_map=var_map,
    ).body.statements[0]
    decls = tuple(Declaration("int", var_map[name]) for name in in_order)
    new_block = Block(block.statements[: i + 1] + decls + (clone,) + block.statements[i + 1:])
    return replace_statement(fn, block, new_block)


def ro(fn: AstFunction, rng) -> AstFunction | None:
    """Exchange one randomly chosen adjacent, dependency-free pair of
    straight-line statements. None if no pair qualifies."""
    rng = _rng(rng)
    pairs: list[tuple[Block, int]] = []
    for block in iter_blocks(fn):
        for run in basic_blocks(block):
            for a, b in zip(run, run[1:]):
                if swappable(block.statements[a], block.statements[b]):
                    pairs.append((block, a))
    if not pairs:
        return None
    block, i = pairs[int(rng.integers(len(pairs)))]
    stmts = list(block.statements)
    stmts[i], stmts[i + 1] = stmts[i + 1], stmts[i]
    return replace_statement(fn, block, Block(tuple(stmts)))


def _deletable_sites(fn: AstFunction) -> list[tuple[Block, int]]:
    return_count = sum(1 for block in iter_blocks(fn)
                       for stmt in block.statements if stmt.kind == "return")
    sites = []
    for block in iter_blocks(fn):
        for i, stmt in enumerate(block.statements):
            if stmt.kind in ("declaration", "assignment", "call"):
                sites.append((block, i))
            elif stmt.kind == "return" and return_count > 1:
                sites.append((block, i))
    return sites


def sp(fn: AstFunction, rng) -> AstFunction | None:
    """Drop one simple statement. Control-flow headers, block braces and
    a sole return are never dropped, so the result always parses. None if
    nothing is deletable."""
    rng = _rng(rng)
    sites = _deletable_sites(fn)
    if not sites:
        return None
    block, i = sites[int(rng.integers(len(sites)))]
    return replace_statement(
        fn, block, Block(block.statements[:i] + block.statements[i + 1:]))


# ---------------------------------------------------------------------------
# Comment operators
# ---------------------------------------------------------------------------

def nl_delete(comment: Comment, rng) -> Comment:
    """Drop one random word."""
    if len(comment) < 1:
        raise TooShortError("delete needs at least one word")
    rng = _rng(rng)
    i = int(rng.integers(len(comment)))
    return Comment(comment.words[:i] + comment.words[i + 1:])


def nl_switch(comment: Comment, rng) -> Comment:
    """Exchange two random word positions."""
    if len(comment) < 2:
        raise TooShortError("switch needs at least two words")
    rng = _rng(rng)
    i, j = (int(x) for x in rng.choice(len(comment), size=2, replace=False))
    words = list(comment.words)
    words[i], words[j] = words[j], words[i]
    return Comment(tuple(words))


def nl_copy(comment: Comment, rng) -> Comment:
    """Duplicate one random word in place."""
    if len(comment) < 1:
        raise TooShortError("copy needs at least one word")
    rng = _rng(rng)
    i = int(rng.integers(len(comment)))
    return Comment(comment.words[: i + 1] + comment.words[i:])


def back_translate(comment: Comment, translator: Translator,
                   src_lang: str = "en", pivot_lang: str = "de") -> Comment:
    """Translate the comment to a pivot language and back."""
    pivot = translator.translate(comment.text, src_lang, pivot_lang)
    text = translator.translate(pivot, pivot_lang, src_lang)
    words = tuple(text.split())
    if not words:
        raise TranslatorUnavailableError("round-trip translation produced no text")
    return Comment(words)


# ---------------------------------------------------------------------------
# Set construction and the attack
# ---------------------------------------------------------------------------

def build_sets(fn: AstFunction, comment: Comment, vocab: NameVocabulary, rng,
               translator: Translator | None = None,
               enabled: dict[str, bool] | None = None) -> AugmentationSet:
    """Run each enabled operator once and collect the variants.

    Operators that do not apply to this sample (no assignment for the
    dead-code insert, too short a comment, translator down) contribute
    nothing. Deterministic in (inputs, seed): disabled operators consume
    no randomness, but each enabled one draws from its own substream.
    """
    rng = _rng(rng)
    streams = {op: np.random.default_rng(rng.integers(2**63)) for op in ALL_OPERATORS}

    def on(op: str) -> bool:
        return enabled is None or enabled.get(op, True)

    sets = AugmentationSet()
    if on("rfn"):
        sets.program_variants.append(("rfn", rfn(fn, vocab, streams["rfn"])))
    if on("rv") and fn.variables:
        sets.program_variants.append(("rv", rv(fn, vocab, streams["rv"])))
    if on("idc"):
        variant = idc(fn, streams["idc"])
        if variant is not None:
            sets.program_variants.append(("idc", variant))
    if on("ro"):
        variant = ro(fn, streams["ro"])
        if variant is not None:
            sets.program_variants.append(("ro", variant))
    if on("sp"):
        variant = sp(fn, streams["sp"])
        if variant is not None:
            sets.program_variants.append(("sp", variant))

    if on("trans") and translator is not None:
        try:
            sets.comment_variants.append(("trans", back_translate(comment, translator)))
        except TranslatorUnavailableError:
            pass
    if on("delete") and len(comment) >= 1:
        sets.comment_variants.append(("delete", nl_delete(comment, streams["delete"])))
    if on("switch") and len(comment) >= 2:
        sets.comment_variants.append(("switch", nl_switch(comment, streams["switch"])))
    if on("copy") and len(comment) >= 1:
        sets.comment_variants.append(("copy", nl_copy(comment, streams["copy"])))
    return sets


def rename_attack(fn: AstFunction, n_edits: int, rng) -> AstFunction:
    """Adversarial perturbation: rename `n_edits` distinct variables (all
    occurrences each) to fresh names absent from the function. Functions
    with fewer variables get all of them renamed."""
    if n_edits < 1:
        raise ValueError("n_edits must be >= 1")
    rng = _rng(rng)
    variables = fn.variables
    if not variables:
        raise NoVariablesError(f"function {fn.name!r} has no variables")
    k = min(n_edits, len(variables))
    chosen_idx = sorted(int(i) for i in rng.choice(len(variables), size=k, replace=False))
    gen = fresh_names("_v", all_identifiers(fn))
    var_map = {variables[i]: next(gen) for i in chosen_idx}
    return rename_identifiers(fn, var_map=var_map)
