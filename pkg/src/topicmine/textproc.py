"""Text processing pipeline: tokenize, drop stop words, stem, form n-grams.

Every operation is a pure function; ``process`` composes them in the fixed
order tokenize -> remove_stopwords -> stem -> ngrams. Stop words are removed
BEFORE n-grams are formed, so a bigram may span a removed stop word
("cessation of hostilities" yields the bigram "cessat hostil").
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import ConfigurationError, InputError
from .porter import stem

__all__ = [
    "TokenizerConfig",
    "default_stopwords",
    "load_stopwords",
    "tokenize",
    "remove_stopwords",
    "ngrams",
    "process",
    "stem",
]

# maximal runs of alphanumeric characters (unicode-aware, underscore excluded)
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)
_APOSTROPHES = str.maketrans("", "", "'’")


@lru_cache(maxsize=1)
def default_stopwords() -> frozenset[str]:
    """The bundled stop-word list (see data/stopwords.txt)."""
    text = resources.files("topicmine.data").joinpath("stopwords.txt").read_text("utf-8")
    return frozenset(_parse_stopwords(text))


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stop-word file: UTF-8, one word per line, ``#`` comments."""
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise InputError(f"cannot read stop-word file {path}: {exc}") from exc
    return frozenset(_parse_stopwords(text))


def _parse_stopwords(text: str) -> list[str]:
    words = []
    for line in text.splitlines():
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        if word != word.lower() or len(word.split()) != 1:
            raise ConfigurationError(
                f"stop-word entries must be single lowercase words, got {word!r}"
            )
        words.append(word)
    return words


@dataclass(frozen=True)
class TokenizerConfig:
    """Settings shared by document processing and keyword canonicalization."""

    ngram_min: int = 1
    ngram_max: int = 2
    min_token_len: int = 2
    stopwords: frozenset[str] = field(default_factory=default_stopwords)

    def __post_init__(self) -> None:
        if self.ngram_min < 1:
            raise ConfigurationError("ngram_min must be >= 1")
        if self.ngram_max < self.ngram_min:
            raise ConfigurationError("ngram_max must be >= ngram_min")
        if self.min_token_len < 1:
            raise ConfigurationError("min_token_len must be >= 1")
        for word in self.stopwords:
            if word != word.lower() or len(word.split()) != 1:
                raise ConfigurationError(
                    f"stop-word entries must be single lowercase words, got {word!r}"
                )


def tokenize(text: str, config: TokenizerConfig) -> list[str]:
    """Lowercase, delete apostrophes in place, split into alphanumeric runs.

    Tokens shorter than ``config.min_token_len`` are dropped. Hyphens and all
    other punctuation split tokens; apostrophes (straight and curly) are
    deleted so "women's" becomes "womens".
    """
    lowered = text.lower().translate(_APOSTROPHES)
    return [t for t in _TOKEN_RE.findall(lowered) if len(t) >= config.min_token_len]


def remove_stopwords(tokens: list[str], stopwords: frozenset[str]) -> list[str]:
    """Drop every token found in ``stopwords``, preserving order."""
    return [t for t in tokens if t not in stopwords]


def ngrams(tokens: list[str], ngram_min: int, ngram_max: int) -> list[str]:
    """All contiguous n-token windows for n in [ngram_min, ngram_max].

    Unigrams come first in document order, then bigrams in document order,
    and so on; windows are joined with single spaces.
    """
    out: list[str] = []
    for n in range(ngram_min, ngram_max + 1):
        out.extend(" ".join(tokens[i : i + n]) for i in range(len(tokens) - n + 1))
    return out


def process(text: str, config: TokenizerConfig) -> list[str]:
    """Full pipeline: tokenize, remove stop words, stem, emit n-grams."""
    tokens = remove_stopwords(tokenize(text, config), config.stopwords)
    stems = [stem(t) for t in tokens]
    return ngrams(stems, config.ngram_min, config.ngram_max)
