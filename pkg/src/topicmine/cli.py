"""Command-line pipeline: load, process, vectorize, score, report.

One invocation runs the whole pipeline with a fully explicit configuration
and writes scores.csv, coverage.json, heatmap.svg and a resolved-config echo
(config.json) into the output directory. Two invocations with identical
config and inputs produce byte-identical output directories, at any
parallelism. Logging goes to standard error; machine output only to files.

Exit codes: 0 success, 2 input error, 3 configuration error, 4 output error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .corpus import Corpus, load_corpus, manifest_from_directory, read_manifest_file
from .errors import ConfigurationError, OutputError, TopicMineError
from .report import (
    HeatmapSpec,
    default_palette,
    render_heatmap_svg,
    write_coverage_json,
    write_scores_csv,
)
from .scoring import engagement, keyword_coverage, normalize_scores, score_topics
from .textproc import TokenizerConfig, default_stopwords, load_stopwords, process
from .topics import (
    OVERSIZED,
    canonicalize_model,
    default_sdg_model,
    load_topic_model,
    write_topic_model,
)
from .vectorizer import build_vocabulary, dump_matrix_csv, tfidf_matrix

__all__ = ["RunConfig", "run", "export_default_vocabulary", "main"]

logger = logging.getLogger("topicmine")

BUILTIN_VOCABULARY = "builtin:sdg"
BUILTIN_STOPWORDS = "builtin:default"


@dataclass
class RunConfig:
    """Fully explicit run settings; echoed to config.json in the output dir."""

    input: str | None = None
    manifest: str | None = None
    vocabulary: str | None = None  # None = embedded SDG model
    output_dir: str = "out"
    ngram_min: int = 1
    ngram_max: int = 2
    min_token_len: int = 2
    stopwords: str | None = None  # None = bundled list
    normalize: str = "global-max"
    aggregate: str = "sum"
    engagement_threshold: float = 0.0
    bands: int = 5
    dump_matrix: bool = False
    jobs: int = 1


def _resolve_manifest(config: RunConfig) -> list[tuple[str, Path]]:
    # explicit manifest wins when both are given
    if config.manifest:
        return read_manifest_file(config.manifest)
    if config.input:
        return manifest_from_directory(config.input)
    raise ConfigurationError("either --input or --manifest is required")


def _process_corpus(
    corpus: Corpus, tok_config: TokenizerConfig, jobs: int
) -> list[list[str]]:
    texts = [doc.text for doc in corpus]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda t: process(t, tok_config), texts))
    return [process(t, tok_config) for t in texts]


def _echo_config(config: RunConfig, manifest: list[tuple[str, Path]], spec: HeatmapSpec) -> str:
    resolved = {
        "input": config.input,
        "manifest": config.manifest,
        "documents": [[doc_id, str(path)] for doc_id, path in manifest],
        "vocabulary": config.vocabulary or BUILTIN_VOCABULARY,
        "stopwords": config.stopwords or BUILTIN_STOPWORDS,
        "ngram_min": config.ngram_min,
        "ngram_max": config.ngram_max,
        "min_token_len": config.min_token_len,
        "normalize": config.normalize,
        "aggregate": config.aggregate,
        "engagement_threshold": config.engagement_threshold,
        "bands": spec.bands,
        "palette": list(spec.palette),
        "dump_matrix": config.dump_matrix,
        "jobs": config.jobs,
        "output_dir": config.output_dir,
    }
    return json.dumps(resolved, indent=2, ensure_ascii=False) + "\n"


def run(config: RunConfig) -> int:
    """Execute the full pipeline; returns the process exit status."""
    written: list[Path] = []
    try:
        _run_pipeline(config, written)
        return 0
    except TopicMineError as exc:
        for path in written:  # never leave partial outputs behind
            try:
                path.unlink()
            except OSError:
                pass
        category = {2: "input", 3: "configuration", 4: "output"}.get(
            getattr(exc, "exit_code", 3), "configuration"
        )
        logger.error("%s error: %s", category, exc)
        return getattr(exc, "exit_code", 3)


def _run_pipeline(config: RunConfig, written: list[Path]) -> None:
    stopwords = (
        load_stopwords(config.stopwords) if config.stopwords else default_stopwords()
    )
    tok_config = TokenizerConfig(
        ngram_min=config.ngram_min,
        ngram_max=config.ngram_max,
        min_token_len=config.min_token_len,
        stopwords=stopwords,
    )
    model = (
        load_topic_model(config.vocabulary)
        if config.vocabulary
        else default_sdg_model()
    )
    spec = HeatmapSpec(bands=config.bands, palette=default_palette(config.bands))
    if config.jobs < 1:
        raise ConfigurationError("--jobs must be >= 1")

    manifest = _resolve_manifest(config)
    corpus = load_corpus(manifest)
    logger.info("loaded %d document(s)", len(corpus))

    processed = _process_corpus(corpus, tok_config, config.jobs)
    vocab = build_vocabulary(processed)
    matrix = tfidf_matrix(processed, vocab)
    logger.info("vocabulary: %d terms", len(vocab))

    canonical = canonicalize_model(model, tok_config)
    scores = score_topics(matrix, vocab, canonical, corpus.ids, config.aggregate)
    scores = normalize_scores(scores, config.normalize)
    coverage = keyword_coverage(canonical, vocab)
    engaged = engagement(scores, config.engagement_threshold)

    out_dir = Path(config.output_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputError(f"cannot create output directory {out_dir}: {exc}") from exc

    def emit(name: str, writer) -> None:
        path = out_dir / name
        written.append(path)
        writer(path)

    emit("config.json", lambda p: _write_utf8(p, _echo_config(config, manifest, spec)))
    emit("scores.csv", lambda p: write_scores_csv(scores, p))
    emit("coverage.json", lambda p: write_coverage_json(coverage, engaged, p))
    emit("heatmap.svg", lambda p: render_heatmap_svg(scores, spec, p))
    if config.dump_matrix:
        emit("tfidf_matrix.csv", lambda p: dump_matrix_csv(matrix, vocab, corpus.ids, p))

    # end-of-run warning summary
    repairs = sum(doc.encoding_repairs for doc in corpus)
    if repairs:
        logger.warning("encoding: %d invalid byte sequence(s) repaired across the corpus", repairs)
    oversized = [
        kw.source_phrase
        for topic in canonical
        for kw in topic.keywords
        if kw.status == OVERSIZED
    ]
    if oversized:
        logger.warning(
            "%d keyword(s) can never match at ngram_max=%d: %s",
            len(oversized),
            tok_config.ngram_max,
            ", ".join(repr(p) for p in oversized),
        )
    logger.info(
        "done: %d topics x %d documents, %d/%d keywords found in corpus",
        len(scores.topic_ids),
        len(scores.doc_ids),
        coverage.found_keywords,
        coverage.total_keywords,
    )


def _write_utf8(path: Path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write config echo to {path}: {exc}") from exc


def export_default_vocabulary(path: str | Path) -> None:
    """Write the embedded default topic model in the vocabulary file format."""
    write_topic_model(default_sdg_model(), path)


def export_default_stopwords(path: str | Path) -> None:
    """Write the bundled stop-word list, one word per line."""
    words = sorted(default_stopwords())
    try:
        Path(path).write_text("\n".join(words) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"cannot write stop-word list to {path}: {exc}") from exc


class _Parser(argparse.ArgumentParser):
    # bad flag values are configuration errors (exit 3), not input errors
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: configuration error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="topicmine",
        description=(
            "Score how strongly each document of a plain-text corpus engages "
            "a keyword-defined topic model (default: the built-in Sustainable "
            "Development Goals vocabulary) via per-topic TF-IDF mass."
        ),
    )
    parser.add_argument("--input", help="directory of .txt documents (id = filename stem)")
    parser.add_argument(
        "--manifest",
        help="manifest file (one id<TAB>path per line); wins over --input",
    )
    parser.add_argument("--vocabulary", help="topic vocabulary JSON (default: built-in SDG model)")
    parser.add_argument("--output-dir", help="directory for result files")
    parser.add_argument("--ngram-min", type=int, default=1, help="shortest n-gram (default 1)")
    parser.add_argument("--ngram-max", type=int, default=2, help="longest n-gram (default 2)")
    parser.add_argument(
        "--min-token-len", type=int, default=2, help="drop shorter tokens (default 2)"
    )
    parser.add_argument("--stopwords", help="stop-word file overriding the bundled list")
    parser.add_argument(
        "--normalize",
        choices=["none", "global-max", "per-doc-max"],
        default="global-max",
        help="score normalization mode (default global-max)",
    )
    parser.add_argument(
        "--aggregate",
        choices=["sum", "mean"],
        default="sum",
        help="per-topic aggregation (default sum)",
    )
    parser.add_argument(
        "--engagement-threshold",
        type=float,
        default=0.0,
        help="a document engages a topic iff its raw score exceeds this (default 0)",
    )
    parser.add_argument("--bands", type=int, default=5, help="heatmap color bands (default 5)")
    parser.add_argument(
        "--dump-matrix",
        action="store_true",
        help="also write the TF-IDF matrix as tfidf_matrix.csv",
    )
    parser.add_argument(
        "--jobs", type=int, default=1, help="per-document parallelism (default 1)"
    )
    parser.add_argument(
        "--export-default-vocabulary",
        metavar="PATH",
        help="write the built-in topic vocabulary to PATH and exit",
    )
    parser.add_argument(
        "--export-default-stopwords",
        metavar="PATH",
        help="write the built-in stop-word list to PATH and exit",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    args = build_parser().parse_args(argv)

    try:
        if args.export_default_vocabulary:
            export_default_vocabulary(args.export_default_vocabulary)
            return 0
        if args.export_default_stopwords:
            export_default_stopwords(args.export_default_stopwords)
            return 0
    except TopicMineError as exc:
        logger.error("output error: %s", exc)
        return getattr(exc, "exit_code", 4)

    if not args.output_dir:
        logger.error("configuration error: --output-dir is required")
        return 3
    config = RunConfig(
        input=args.input,
        manifest=args.manifest,
        vocabulary=args.vocabulary,
        output_dir=args.output_dir,
        ngram_min=args.ngram_min,
        ngram_max=args.ngram_max,
        min_token_len=args.min_token_len,
        stopwords=args.stopwords,
        normalize=args.normalize,
        aggregate=args.aggregate,
        engagement_threshold=args.engagement_threshold,
        bands=args.bands,
        dump_matrix=args.dump_matrix,
        jobs=args.jobs,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
