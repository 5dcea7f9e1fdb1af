"""Semantics-preserving augmentation of programs and comments."""

from .names import NameVocabulary, fresh_names
from .operators import (
    ALL_OPERATORS,
    COMMENT_OPERATORS,
    PROGRAM_OPERATORS,
    AugmentationSet,
    NoVariablesError,
    TooShortError,
    back_translate,
    build_sets,
    idc,
    nl_copy,
    nl_delete,
    nl_switch,
    rename_attack,
    rfn,
    ro,
    rv,
    sp,
)
from .translate import (
    HttpTranslator,
    StubTranslator,
    Translator,
    TranslatorUnavailableError,
)

__all__ = [
    "ALL_OPERATORS", "COMMENT_OPERATORS", "PROGRAM_OPERATORS",
    "AugmentationSet", "HttpTranslator", "NameVocabulary",
    "NoVariablesError", "StubTranslator", "TooShortError", "Translator",
    "TranslatorUnavailableError", "back_translate", "build_sets",
    "fresh_names", "idc", "nl_copy", "nl_delete", "nl_switch",
    "rename_attack", "rfn", "ro", "rv", "sp",
]
