"""Corpus vocabulary and the smoothed, L2-normalized TF-IDF matrix.

Pinned weighting: TF is the raw within-document count, IDF is the smoothed
form ln((1 + N) / (1 + df)) + 1, and each document row is divided by its
Euclidean norm (rows of all zeros stay all zeros). Natural logarithm,
double precision throughout.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .errors import InputError, OutputError

__all__ = [
    "Vocabulary",
    "TfidfMatrix",
    "build_vocabulary",
    "idf_weight",
    "tfidf_matrix",
    "dump_matrix_csv",
]


@dataclass(frozen=True)
class Vocabulary:
    """Corpus-wide term list (lexicographically sorted) with document frequencies."""

    terms: tuple[str, ...]
    doc_freq: tuple[int, ...]
    index: Mapping[str, int]

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index


@dataclass(frozen=True)
class TfidfMatrix:
    """Per-document sparse rows of normalized TF-IDF weights.

    ``rows[d]`` maps term index -> weight; absent indices are zero.
    Row order equals corpus order.
    """

    n_docs: int
    rows: tuple[Mapping[int, float], ...]

    def weight(self, doc: int, term_index: int) -> float:
        return self.rows[doc].get(term_index, 0.0)

    def row_norm(self, doc: int) -> float:
        return math.sqrt(sum(w * w for w in self.rows[doc].values()))


def build_vocabulary(processed_corpus: Sequence[Sequence[str]]) -> Vocabulary:
    """Sorted union of all documents' terms with document frequencies.

    Raises an input error when every document is empty after processing,
    because downstream scores would be undefined.
    """
    if not processed_corpus:
        raise InputError("cannot build a vocabulary from zero documents")
    df: Counter[str] = Counter()
    for terms in processed_corpus:
        df.update(set(terms))
    if not df:
        raise InputError(
            "empty vocabulary: every document is empty after text processing"
        )
    terms = tuple(sorted(df))
    return Vocabulary(
        terms=terms,
        doc_freq=tuple(df[t] for t in terms),
        index={t: i for i, t in enumerate(terms)},
    )


def idf_weight(n_docs: int, doc_freq: int) -> float:
    """Smoothed inverse document frequency: ln((1 + N) / (1 + df)) + 1.

    Always >= 1, with equality iff doc_freq == n_docs.
    """
    if n_docs < 1:
        raise ValueError(f"n_docs must be >= 1, got {n_docs}")
    if not 1 <= doc_freq <= n_docs:
        raise ValueError(f"doc_freq must be in 1..{n_docs}, got {doc_freq}")
    return math.log((1 + n_docs) / (1 + doc_freq)) + 1.0


def tfidf_matrix(
    processed_corpus: Sequence[Sequence[str]], vocabulary: Vocabulary
) -> TfidfMatrix:
    """Raw count x IDF per term, then L2-normalize each document row.

    Summation runs in term-index order, so results are bit-identical
    regardless of how callers parallelize the preceding stages.
    """
    n_docs = len(processed_corpus)
    idf = [idf_weight(n_docs, df) for df in vocabulary.doc_freq]
    rows = []
    for terms in processed_corpus:
        counts = Counter(terms)
        raw = {
            vocabulary.index[t]: c * idf[vocabulary.index[t]]
            for t, c in counts.items()
        }
        norm = math.sqrt(sum(raw[i] * raw[i] for i in sorted(raw)))
        if norm > 0.0:
            rows.append({i: raw[i] / norm for i in sorted(raw)})
        else:
            rows.append({})
    return TfidfMatrix(n_docs=n_docs, rows=tuple(rows))


def dump_matrix_csv(
    matrix: TfidfMatrix,
    vocabulary: Vocabulary,
    doc_ids: Sequence[str],
    path: str | Path,
) -> None:
    """Debug dump: ``doc_id,term,weight`` rows sorted by (doc order, term index),
    weights with 9 decimal places; only nonzero entries are written."""
    lines = ["doc_id,term,weight"]
    for d, doc_id in enumerate(doc_ids):
        row = matrix.rows[d]
        for i in sorted(row):
            lines.append(f"{doc_id},{vocabulary.terms[i]},{row[i]:.9f}")
    try:
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"cannot write matrix dump to {path}: {exc}") from exc
