"""Frontend: parse a C-like function subset, analyze it, render it back.

The parser is deliberately pluggable: anything that satisfies `Frontend`
(parse text to an `AstFunction`, render one back) can feed the rest of
the pipeline.
"""

from typing import Protocol

from .analysis import (
    all_identifiers,
    basic_blocks,
    child_statements,
    def_use,
    expr_uses,
    has_call,
    iter_blocks,
    iter_statements,
    rename_identifiers,
    replace_statement,
    swappable,
)
from .ast import (
    Assignment,
    AstFunction,
    Binary,
    Block,
    Call,
    CallStmt,
    Comment,
    Declaration,
    FloatLit,
    For,
    If,
    IntLit,
    Name,
    Occurrence,
    Param,
    Return,
    Unary,
    While,
    render,
)
from .parser import ParseError, parse_function


class Frontend(Protocol):
    def parse(self, source: str) -> AstFunction: ...

    def render(self, fn: AstFunction) -> str: ...


class CLikeFrontend:
    """Default frontend for the documented C-like subset."""

    def parse(self, source: str) -> AstFunction:
        return parse_function(source)

    def render(self, fn: AstFunction) -> str:
        return render(fn)


__all__ = [
    "Assignment", "AstFunction", "Binary", "Block", "Call", "CallStmt",
    "CLikeFrontend", "Comment", "Declaration", "FloatLit", "For", "Frontend",
    "If", "IntLit", "Name", "Occurrence", "Param", "ParseError", "Return",
    "Unary", "While",
    "all_identifiers", "basic_blocks", "child_statements", "def_use",
    "expr_uses", "has_call", "iter_blocks", "iter_statements",
    "parse_function", "rename_identifiers", "render", "replace_statement",
    "swappable",
]
