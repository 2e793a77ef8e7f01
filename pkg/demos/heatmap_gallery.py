"""Render SVG heatmaps with different normalizations and band counts.

Writes three heatmaps of the same synthetic score matrix into
demos/output/: the default 5-band global-max view, a per-document view,
and a 9-band variant with an interpolated palette. Run with:
python demos/heatmap_gallery.py
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from topicmine import (
    HeatmapSpec,
    TopicScoreMatrix,
    default_palette,
    normalize_scores,
    render_heatmap_svg,
)

OUT = Path(__file__).parent / "output"


def synthetic_scores() -> TopicScoreMatrix:
    rng = np.random.default_rng(2030)
    topics = tuple(f"G{i}" for i in range(8))
    docs = ("north", "south", "east", "west", "centre")
    raw = rng.random((len(topics), len(docs))) ** 2
    raw[3, :] = 0.0  # one fully unengaged topic, as real corpora produce
    return TopicScoreMatrix(
        topic_ids=topics,
        topic_names=topics,
        doc_ids=docs,
        raw=raw,
    )


def main() -> None:
    OUT.mkdir(exist_ok=True)
    scores = synthetic_scores()

    # Global-max keeps documents comparable to each other.
    render_heatmap_svg(
        normalize_scores(scores, "global-max"),
        HeatmapSpec(),
        OUT / "heatmap_global_max.svg",
    )

    # Per-document scaling highlights each document's own top topics.
    render_heatmap_svg(
        normalize_scores(scores, "per-doc-max"),
        HeatmapSpec(),
        OUT / "heatmap_per_doc.svg",
    )

    # More bands resolve finer score differences; the palette is
    # interpolated from the same light-to-dark ramp.
    render_heatmap_svg(
        normalize_scores(scores, "global-max"),
        HeatmapSpec(bands=9, palette=default_palette(9)),
        OUT / "heatmap_9_bands.svg",
    )

    for path in sorted(OUT.glob("heatmap_*.svg")):
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
