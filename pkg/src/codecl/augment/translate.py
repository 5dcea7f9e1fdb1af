"""Round-trip translation backends for comment augmentation.

Two implementations of the `Translator` contract ship here: an HTTP
client for a real machine-translation service, and a deterministic
offline stub so tests and CI never touch the network. The wire contract
for the HTTP backend is a JSON POST of {"text", "src_lang", "tgt_lang"}
answered by {"text": ...}.
"""

from __future__ import annotations

import threading
from typing import Protocol

import requests

from ..errors import CodeclError


class TranslatorUnavailableError(CodeclError):
    """The translation backend failed; callers fall back to the simple
    word-level comment operators."""


class Translator(Protocol):
    def translate(self, text: str, src_lang: str, tgt_lang: str) -> str: ...


class StubTranslator:
    """Offline translator: identity, or a word-substitution table.

    With a table such as {"fast": "quick"}, a round trip through any
    language pair replaces mapped words and leaves the rest untouched,
    which is a deterministic stand-in for paraphrasing.
    """

    def __init__(self, table: dict[str, str] | None = None):
        self.table = dict(table or {})

    def translate(self, text: str, src_lang: str, tgt_lang: str) -> str:
        return " ".join(self.table.get(w, w) for w in text.split())


class HttpTranslator:
    """Client for a configurable translation endpoint.

    Any transport or protocol failure surfaces as
    TranslatorUnavailableError. Safe for concurrent use: requests
    sessions are not thread-safe, so calls are serialized.
    """

    def __init__(self, endpoint: str, timeout: float = 10.0):
        self.endpoint = endpoint
        self.timeout = timeout
        self._session = requests.Session()
        self._lock = threading.Lock()

    def translate(self, text: str, src_lang: str, tgt_lang: str) -> str:
        payload = {"text": text, "src_lang": src_lang, "tgt_lang": tgt_lang}
        try:
            with self._lock:
                resp = self._session.post(self.endpoint, json=payload, timeout=self.timeout)
            resp.raise_for_status()
            body = resp.json()
        except (requests.RequestException, ValueError) as exc:
            raise TranslatorUnavailableError(f"translation request failed: {exc}") from exc
        if not isinstance(body, dict) or "text" not in body:
            raise TranslatorUnavailableError(f"malformed translation response: {body!r}")
        return str(body["text"])
