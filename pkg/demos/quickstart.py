"""Quickstart: score a three-document corpus against the built-in topic model.

Walks the whole library pipeline by hand: load, process, vectorize,
canonicalize, score, normalize, and summarize coverage and engagement.
Run with: python demos/quickstart.py
"""

from __future__ import annotations

import tempfile
from pathlib import Path

from topicmine import (
    TokenizerConfig,
    build_vocabulary,
    canonicalize_model,
    default_sdg_model,
    engagement,
    keyword_coverage,
    load_corpus,
    normalize_scores,
    process,
    score_topics,
    tfidf_matrix,
)

TEXTS = {
    "nordica": (
        "Our strategy invests in green energy and drinking water for all. "
        "Education, teaching and training remain the foundation of our "
        "society and its prosperity."
    ),
    "borduria": (
        "Industrial growth, trade and business come first. Hunger and "
        "famine were defeated by modern agriculture and food production."
    ),
    "syldavia": (
        "Smart cities for the people: cooperation, participation and "
        "fairness guide the sustainable development of our communities."
    ),
}


def main() -> None:
    # A corpus is an ordered list of (id, path) pairs; write the sample
    # texts to disk first, as a real run would read converted documents.
    with tempfile.TemporaryDirectory() as tmp:
        manifest = []
        for doc_id, text in TEXTS.items():
            path = Path(tmp) / f"{doc_id}.txt"
            path.write_text(text, encoding="utf-8")
            manifest.append((doc_id, path))
        corpus = load_corpus(manifest)

    # Tokenize, drop stop words, stem, and form 1- and 2-grams.
    config = TokenizerConfig()
    processed = [process(doc.text, config) for doc in corpus]
    print(f"first ten terms of {corpus.ids[0]!r}: {processed[0][:10]}")

    # TF-IDF over the whole corpus, then topic scores.
    vocab = build_vocabulary(processed)
    matrix = tfidf_matrix(processed, vocab)
    model = canonicalize_model(default_sdg_model(), config)
    scores = normalize_scores(score_topics(matrix, vocab, model, corpus.ids))

    print(f"\n{'topic':<6}" + "".join(f"{d:>10}" for d in scores.doc_ids))
    for ti, topic_id in enumerate(scores.topic_ids):
        row = "".join(f"{v:>10.3f}" for v in scores.normalized[ti])
        print(f"{topic_id:<6}{row}")

    coverage = keyword_coverage(model, vocab)
    print(
        f"\n{coverage.found_keywords} of {coverage.total_keywords} vocabulary "
        f"keywords occur in this corpus ({coverage.oversized_keywords} can "
        "never match at the current n-gram limit)"
    )

    for entry in engagement(scores).per_document:
        print(
            f"{entry.doc_id}: engages {entry.engaged_topics} topics "
            f"({entry.engaged_goals} goals excluding overarching terms)"
        )


if __name__ == "__main__":
    main()
