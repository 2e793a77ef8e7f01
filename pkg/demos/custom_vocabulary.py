"""Define and use a custom topic vocabulary instead of the built-in one.

Shows the vocabulary file format, keyword canonicalization (including an
oversized keyword that can never match at the default 2-gram limit), and
how coverage reporting surfaces it. Run with:
python demos/custom_vocabulary.py
"""

from __future__ import annotations

import json
import tempfile
from pathlib import Path

from topicmine import (
    TokenizerConfig,
    build_vocabulary,
    canonicalize_keyword,
    canonicalize_model,
    keyword_coverage,
    load_topic_model,
    process,
    score_topics,
    tfidf_matrix,
)

VOCABULARY = {
    "topics": [
        {
            "id": "ENERGY",
            "name": "Energy policy",
            "keywords": ["green energy", "solar power", "wind power", "grid"],
        },
        {
            "id": "PRIVACY",
            "name": "Data protection",
            # the three-word keyword is oversized at ngram_max=2 and will be
            # flagged rather than silently dropped
            "keywords": ["privacy", "data protection", "general data protection regulation"],
        },
    ]
}

DOCS = {
    "report_a": "Solar power and wind power will feed the national grid.",
    "report_b": "Privacy and data protection are priorities; green energy too.",
}


def main() -> None:
    # Vocabularies are plain JSON files: a list of topics with id, name,
    # and keyword phrases.
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "energy_privacy.json"
        path.write_text(json.dumps(VOCABULARY, indent=2), encoding="utf-8")
        model = load_topic_model(path)

    config = TokenizerConfig()

    # Each keyword is run through the same pipeline as the documents.
    for phrase in ("green energy", "general data protection regulation"):
        kw = canonicalize_keyword(phrase, config)
        print(f"{phrase!r} -> tokens {list(kw.canonical)}, status {kw.status}")

    processed = [process(text, config) for text in DOCS.values()]
    vocab = build_vocabulary(processed)
    matrix = tfidf_matrix(processed, vocab)
    canonical = canonicalize_model(model, config)
    scores = score_topics(matrix, vocab, canonical, list(DOCS))

    print(f"\n{'topic':<8}" + "".join(f"{d:>10}" for d in scores.doc_ids))
    for ti, topic_id in enumerate(scores.topic_ids):
        print(f"{topic_id:<8}" + "".join(f"{v:>10.3f}" for v in scores.raw[ti]))

    print("\ncoverage:")
    for record in keyword_coverage(canonical, vocab).records:
        print(f"  [{record.topic_id}] {record.phrase!r}: {record.status}")


if __name__ == "__main__":
    main()
