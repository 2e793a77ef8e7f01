"""topicmine: keyword-topic engagement scoring for plain-text corpora.

Measures how strongly each document of a corpus engages a keyword-defined
topic model by summing per-document TF-IDF mass over each topic's keywords,
with coverage statistics, engagement counts, and an SVG heatmap. Ships the
UN Sustainable Development Goals vocabulary as the default topic model.

Typical library use::

    from topicmine import (
        TokenizerConfig, load_corpus, process, build_vocabulary, tfidf_matrix,
        default_sdg_model, canonicalize_model, score_topics, normalize_scores,
    )

    corpus = load_corpus([("d1", "d1.txt"), ("d2", "d2.txt")])
    config = TokenizerConfig()
    processed = [process(doc.text, config) for doc in corpus]
    vocab = build_vocabulary(processed)
    matrix = tfidf_matrix(processed, vocab)
    model = canonicalize_model(default_sdg_model(), config)
    scores = normalize_scores(score_topics(matrix, vocab, model, corpus.ids))
"""

from .corpus import (
    Corpus,
    Document,
    load_corpus,
    manifest_from_directory,
    read_document,
    read_manifest_file,
)
from .errors import ConfigurationError, InputError, OutputError, TopicMineError
from .porter import stem
from .report import (
    DEFAULT_PALETTE,
    HeatmapSpec,
    default_palette,
    render_heatmap_svg,
    write_coverage_json,
    write_scores_csv,
)
from .scoring import (
    CoverageReport,
    DocumentEngagement,
    EngagementReport,
    KeywordRecord,
    TopicScoreMatrix,
    engagement,
    keyword_coverage,
    normalize_scores,
    score_topics,
)
from .textproc import (
    TokenizerConfig,
    default_stopwords,
    load_stopwords,
    ngrams,
    process,
    remove_stopwords,
    tokenize,
)
from .topics import (
    MATCHED,
    OVERSIZED,
    CanonicalKeyword,
    CanonicalTopic,
    CanonicalTopicModel,
    Topic,
    TopicModel,
    canonicalize_keyword,
    canonicalize_model,
    default_sdg_model,
    load_topic_model,
    write_topic_model,
)
from .vectorizer import (
    TfidfMatrix,
    Vocabulary,
    build_vocabulary,
    dump_matrix_csv,
    idf_weight,
    tfidf_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # corpus
    "Document",
    "Corpus",
    "read_document",
    "load_corpus",
    "manifest_from_directory",
    "read_manifest_file",
    # errors
    "TopicMineError",
    "InputError",
    "ConfigurationError",
    "OutputError",
    # text processing
    "TokenizerConfig",
    "default_stopwords",
    "load_stopwords",
    "tokenize",
    "remove_stopwords",
    "ngrams",
    "process",
    "stem",
    # vectorizer
    "Vocabulary",
    "TfidfMatrix",
    "build_vocabulary",
    "idf_weight",
    "tfidf_matrix",
    "dump_matrix_csv",
    # topics
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
    # scoring
    "TopicScoreMatrix",
    "KeywordRecord",
    "CoverageReport",
    "DocumentEngagement",
    "EngagementReport",
    "score_topics",
    "normalize_scores",
    "keyword_coverage",
    "engagement",
    # report
    "HeatmapSpec",
    "DEFAULT_PALETTE",
    "default_palette",
    "write_scores_csv",
    "write_coverage_json",
    "render_heatmap_svg",
]
