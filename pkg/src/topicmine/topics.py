"""Topic models: named keyword sets, canonicalized into the corpus term space.

A topic model is an ordered list of topics, each a finite non-empty ordered
set of keyword phrases. Keywords are canonicalized through the exact document
pipeline (tokenize, stop-word removal, stem) so they live in the same term
space as the vectorizer's vocabulary. A keyword whose surviving token count
falls outside the configured n-gram range can never match any corpus term;
it is kept, flagged "oversized", and scores a permanent zero.

The bundled default model maps the 17 UN Sustainable Development Goals
(ids G0-G12 and G14-G17; G0 holds overarching terms, there is no G13) to
goal-title keywords plus thesaurus synonyms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterator

from .errors import ConfigurationError, InputError, OutputError
from .porter import stem
from .textproc import TokenizerConfig, remove_stopwords, tokenize

__all__ = [
    "Topic",
    "TopicModel",
    "CanonicalKeyword",
    "CanonicalTopic",
    "CanonicalTopicModel",
    "MATCHED",
    "OVERSIZED",
    "canonicalize_keyword",
    "canonicalize_model",
    "load_topic_model",
    "default_sdg_model",
    "write_topic_model",
]

MATCHED = "matched-length"
OVERSIZED = "oversized"


@dataclass(frozen=True)
class Topic:
    id: str
    name: str
    keywords: tuple[str, ...]


@dataclass(frozen=True)
class TopicModel:
    topics: tuple[Topic, ...]

    def __iter__(self) -> Iterator[Topic]:
        return iter(self.topics)

    def __len__(self) -> int:
        return len(self.topics)

    @property
    def topic_ids(self) -> tuple[str, ...]:
        return tuple(t.id for t in self.topics)


@dataclass(frozen=True)
class CanonicalKeyword:
    """A keyword phrase after the document text pipeline.

    ``canonical`` holds the surviving stemmed tokens. For a matched-length
    keyword they form one joinable n-gram (``term``); an oversized keyword
    has too many tokens (or none at all) and can never match.
    """

    source_phrase: str
    canonical: tuple[str, ...]
    status: str

    @property
    def term(self) -> str | None:
        """The vocabulary Term this keyword matches, or None if oversized."""
        return " ".join(self.canonical) if self.status == MATCHED else None


@dataclass(frozen=True)
class CanonicalTopic:
    id: str
    name: str
    keywords: tuple[CanonicalKeyword, ...]
    # distinct matched-length terms in first-occurrence order; scoring sums
    # over these so a term shared by several keywords is counted once
    terms: tuple[str, ...]

    @property
    def matched_keyword_count(self) -> int:
        return sum(1 for k in self.keywords if k.status == MATCHED)


@dataclass(frozen=True)
class CanonicalTopicModel:
    topics: tuple[CanonicalTopic, ...]
    config: TokenizerConfig

    def __iter__(self) -> Iterator[CanonicalTopic]:
        return iter(self.topics)

    def __len__(self) -> int:
        return len(self.topics)

    @property
    def topic_ids(self) -> tuple[str, ...]:
        return tuple(t.id for t in self.topics)

    @property
    def topic_names(self) -> tuple[str, ...]:
        return tuple(t.name for t in self.topics)


def canonicalize_keyword(phrase: str, config: TokenizerConfig) -> CanonicalKeyword:
    """Run a keyword phrase through the exact document pipeline.

    Matched-length iff the surviving token count n satisfies
    ngram_min <= n <= ngram_max; any other n (including 0) means the keyword
    can never match and is flagged oversized.
    """
    if not phrase:
        raise ConfigurationError("keyword phrases must be non-empty")
    tokens = remove_stopwords(tokenize(phrase, config), config.stopwords)
    stems = tuple(stem(t) for t in tokens)
    if config.ngram_min <= len(stems) <= config.ngram_max:
        status = MATCHED
    else:
        status = OVERSIZED
    return CanonicalKeyword(source_phrase=phrase, canonical=stems, status=status)


def canonicalize_model(model: TopicModel, config: TokenizerConfig) -> CanonicalTopicModel:
    """Canonicalize every keyword of every topic with one tokenizer config."""
    topics = []
    for topic in model:
        keywords = tuple(canonicalize_keyword(p, config) for p in topic.keywords)
        terms: list[str] = []
        for kw in keywords:
            if kw.status == MATCHED and kw.term not in terms:
                terms.append(kw.term)
        topics.append(
            CanonicalTopic(
                id=topic.id, name=topic.name, keywords=keywords, terms=tuple(terms)
            )
        )
    return CanonicalTopicModel(topics=tuple(topics), config=config)


def _validate_model(topics: list[Topic], source: str) -> TopicModel:
    if not topics:
        raise ConfigurationError(f"{source}: topic model has no topics")
    seen_ids: set[str] = set()
    for topic in topics:
        if not topic.id:
            raise ConfigurationError(f"{source}: topic with empty id")
        if topic.id in seen_ids:
            raise ConfigurationError(f"{source}: duplicate topic id {topic.id!r}")
        seen_ids.add(topic.id)
        if not topic.keywords:
            raise ConfigurationError(
                f"{source}: topic {topic.id!r} has an empty keyword list"
            )
        seen_phrases: set[str] = set()
        for phrase in topic.keywords:
            folded = " ".join(phrase.lower().split())
            if folded in seen_phrases:
                raise ConfigurationError(
                    f"{source}: topic {topic.id!r} lists keyword {phrase!r} twice"
                )
            seen_phrases.add(folded)
    return TopicModel(topics=tuple(topics))


def _model_from_obj(obj: object, source: str) -> TopicModel:
    if not isinstance(obj, dict) or not isinstance(obj.get("topics"), list):
        raise ConfigurationError(f"{source}: expected an object with a 'topics' list")
    topics = []
    for i, entry in enumerate(obj["topics"]):
        where = f"{source}: topics[{i}]"
        if not isinstance(entry, dict):
            raise ConfigurationError(f"{where}: expected an object")
        for field in ("id", "name", "keywords"):
            if field not in entry:
                raise ConfigurationError(f"{where}: missing field {field!r}")
        if not isinstance(entry["id"], str) or not isinstance(entry["name"], str):
            raise ConfigurationError(f"{where}: id and name must be strings")
        kws = entry["keywords"]
        if not isinstance(kws, list) or not all(isinstance(k, str) for k in kws):
            raise ConfigurationError(f"{where}: keywords must be a list of strings")
        topics.append(Topic(id=entry["id"], name=entry["name"], keywords=tuple(kws)))
    return _validate_model(topics, source)


def load_topic_model(path: str | Path) -> TopicModel:
    """Load a vocabulary file (JSON with a top-level ``topics`` list)."""
    path = Path(path)
    try:
        text = path.read_text("utf-8")
    except OSError as exc:
        raise InputError(f"cannot read vocabulary file {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"{path}: invalid JSON: {exc}") from exc
    return _model_from_obj(obj, str(path))


def default_sdg_model() -> TopicModel:
    """The embedded Sustainable Development Goals topic model."""
    text = resources.files("topicmine.data").joinpath("sdg_vocabulary.json").read_text("utf-8")
    return _model_from_obj(json.loads(text), "builtin:sdg")


def write_topic_model(model: TopicModel, path: str | Path) -> None:
    """Write a model in the vocabulary file format (load round-trips equal)."""
    payload = {
        "topics": [
            {"id": t.id, "name": t.name, "keywords": list(t.keywords)}
            for t in model
        ]
    }
    try:
        Path(path).write_text(
            json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
        )
    except OSError as exc:
        raise OutputError(f"cannot write vocabulary to {path}: {exc}") from exc
