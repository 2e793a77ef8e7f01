"""Topic scoring: per-topic TF-IDF mass per document, coverage, engagement.

The raw score of topic t for document d is the sum of d's normalized TF-IDF
weights over the topic's distinct matched-length canonical terms (oversized
or corpus-absent keywords contribute zero). Normalization rescales the raw
matrix for display; engagement is decided on raw scores.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import ConfigurationError
from .topics import MATCHED, OVERSIZED, CanonicalTopicModel
from .vectorizer import TfidfMatrix, Vocabulary

__all__ = [
    "TopicScoreMatrix",
    "KeywordRecord",
    "CoverageReport",
    "DocumentEngagement",
    "EngagementReport",
    "NORMALIZATION_MODES",
    "score_topics",
    "normalize_scores",
    "keyword_coverage",
    "engagement",
]

NORMALIZATION_MODES = ("none", "global-max", "per-doc-max")

FOUND = "found-in-corpus"
ABSENT = "absent"


@dataclass(frozen=True, eq=False)
class TopicScoreMatrix:
    """Topic x document score matrix (rows = topics, columns = documents)."""

    topic_ids: tuple[str, ...]
    topic_names: tuple[str, ...]
    doc_ids: tuple[str, ...]
    raw: np.ndarray
    normalized: np.ndarray | None = None
    normalization_mode: str | None = None

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.topic_ids), len(self.doc_ids))


@dataclass(frozen=True)
class KeywordRecord:
    topic_id: str
    phrase: str
    canonical: str
    status: str  # found-in-corpus | absent | oversized


@dataclass(frozen=True)
class CoverageReport:
    total_keywords: int
    found_keywords: int
    records: tuple[KeywordRecord, ...]

    @property
    def oversized_keywords(self) -> int:
        return sum(1 for r in self.records if r.status == OVERSIZED)

    @property
    def absent_keywords(self) -> int:
        return sum(1 for r in self.records if r.status == ABSENT)


@dataclass(frozen=True)
class DocumentEngagement:
    doc_id: str
    engaged_topics: int  # all topics, overarching included
    engaged_goals: int  # overarching topic (id "G0") excluded


@dataclass(frozen=True)
class EngagementReport:
    threshold: float
    per_document: tuple[DocumentEngagement, ...]
    zero_docs_by_topic: Mapping[str, tuple[str, ...]]
    unengaged_topics: tuple[str, ...]


def score_topics(
    matrix: TfidfMatrix,
    vocab: Vocabulary,
    model: CanonicalTopicModel,
    doc_ids: Sequence[str],
    aggregate: str = "sum",
) -> TopicScoreMatrix:
    """Aggregate TF-IDF mass per (topic, document).

    ``aggregate`` is "sum" (default) or "mean"; mean divides each topic sum
    by the topic's matched-length keyword count, for readers of "average"
    as per-keyword averaging.
    """
    if aggregate not in ("sum", "mean"):
        raise ConfigurationError(f"unknown aggregation mode {aggregate!r}")
    if len(doc_ids) != matrix.n_docs:
        raise ValueError("doc_ids length must equal the matrix document count")
    raw = np.zeros((len(model), matrix.n_docs), dtype=np.float64)
    for ti, topic in enumerate(model):
        indices = [vocab.index[t] for t in topic.terms if t in vocab.index]
        for d in range(matrix.n_docs):
            row = matrix.rows[d]
            total = 0.0
            for i in indices:
                total += row.get(i, 0.0)
            raw[ti, d] = total
        if aggregate == "mean":
            count = topic.matched_keyword_count
            if count > 0:
                raw[ti, :] /= count
    return TopicScoreMatrix(
        topic_ids=model.topic_ids,
        topic_names=model.topic_names,
        doc_ids=tuple(doc_ids),
        raw=raw,
    )


def normalize_scores(scores: TopicScoreMatrix, mode: str = "global-max") -> TopicScoreMatrix:
    """Fill the normalized matrix.

    global-max divides every cell by the global maximum raw value;
    per-doc-max divides each document column by its own maximum; none copies
    raw. All-zero matrices (or columns) stay zero.
    """
    if mode in ("per-document-max", "per-doc-max"):
        mode = "per-doc-max"
    elif mode not in ("none", "global-max"):
        raise ConfigurationError(f"unknown normalization mode {mode!r}")
    raw = scores.raw
    if mode == "none":
        normalized = raw.copy()
    elif mode == "global-max":
        peak = raw.max() if raw.size else 0.0
        normalized = raw / peak if peak > 0 else raw.copy()
    else:
        col_max = raw.max(axis=0, keepdims=True)
        safe = np.where(col_max > 0, col_max, 1.0)
        normalized = raw / safe
    return TopicScoreMatrix(
        topic_ids=scores.topic_ids,
        topic_names=scores.topic_names,
        doc_ids=scores.doc_ids,
        raw=raw,
        normalized=normalized,
        normalization_mode=mode,
    )


def keyword_coverage(model: CanonicalTopicModel, vocab: Vocabulary) -> CoverageReport:
    """Per-keyword match status against the corpus vocabulary.

    A keyword is found-in-corpus iff it is matched-length and its canonical
    term occurs in the vocabulary; oversized keywords are never counted found.
    """
    records = []
    found = 0
    for topic in model:
        for kw in topic.keywords:
            if kw.status == OVERSIZED:
                status = OVERSIZED
            elif kw.term in vocab.index:
                status = FOUND
                found += 1
            else:
                status = ABSENT
            records.append(
                KeywordRecord(
                    topic_id=topic.id,
                    phrase=kw.source_phrase,
                    canonical=" ".join(kw.canonical),
                    status=status,
                )
            )
    return CoverageReport(
        total_keywords=len(records), found_keywords=found, records=tuple(records)
    )


def engagement(
    scores: TopicScoreMatrix,
    threshold: float = 0.0,
    overarching_id: str = "G0",
) -> EngagementReport:
    """Binary engagement: document d engages topic t iff raw(t, d) > threshold.

    Reports per-document counts both over all topics and with the overarching
    topic excluded, plus per-topic zero-score document lists and the topics no
    document engages.
    """
    engaged = scores.raw > threshold
    per_document = []
    for d, doc_id in enumerate(scores.doc_ids):
        total = int(engaged[:, d].sum())
        goals = total
        if overarching_id in scores.topic_ids:
            g0 = scores.topic_ids.index(overarching_id)
            goals = total - int(engaged[g0, d])
        per_document.append(
            DocumentEngagement(doc_id=doc_id, engaged_topics=total, engaged_goals=goals)
        )
    zero_docs = {
        topic_id: tuple(
            doc_id
            for d, doc_id in enumerate(scores.doc_ids)
            if not engaged[ti, d]
        )
        for ti, topic_id in enumerate(scores.topic_ids)
    }
    unengaged = tuple(
        topic_id
        for ti, topic_id in enumerate(scores.topic_ids)
        if not engaged[ti].any()
    )
    return EngagementReport(
        threshold=threshold,
        per_document=tuple(per_document),
        zero_docs_by_topic=zero_docs,
        unengaged_topics=unengaged,
    )
