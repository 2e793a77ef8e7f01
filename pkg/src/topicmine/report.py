"""Serialization: scores CSV, coverage/engagement JSON, SVG heatmap.

All three emitters are deterministic byte-for-byte for identical inputs:
fixed key order, fixed number formatting, no timestamps. The heatmap is SVG
(text) precisely so golden-file tests need no image libraries.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConfigurationError, OutputError
from .scoring import CoverageReport, EngagementReport, TopicScoreMatrix

__all__ = [
    "HeatmapSpec",
    "DEFAULT_PALETTE",
    "default_palette",
    "write_scores_csv",
    "write_coverage_json",
    "render_heatmap_svg",
]

# 5-band sequential blues, light to dark
DEFAULT_PALETTE = ("#f7fbff", "#c6dbef", "#6baed6", "#2171b5", "#08306b")


def default_palette(bands: int) -> tuple[str, ...]:
    """A light-to-dark palette of ``bands`` colors.

    For 5 bands this is the stock palette; other counts interpolate it
    linearly in RGB.
    """
    if bands < 2:
        raise ConfigurationError("a heatmap needs at least 2 bands")
    if bands == len(DEFAULT_PALETTE):
        return DEFAULT_PALETTE
    anchors = [
        tuple(int(c[i : i + 2], 16) for i in (1, 3, 5)) for c in DEFAULT_PALETTE
    ]
    colors = []
    for b in range(bands):
        pos = b * (len(anchors) - 1) / (bands - 1)
        lo = int(pos)
        hi = min(lo + 1, len(anchors) - 1)
        frac = pos - lo
        rgb = tuple(
            round(anchors[lo][i] + (anchors[hi][i] - anchors[lo][i]) * frac)
            for i in range(3)
        )
        colors.append("#%02x%02x%02x" % rgb)
    return tuple(colors)


@dataclass(frozen=True)
class HeatmapSpec:
    bands: int = 5
    palette: tuple[str, ...] = DEFAULT_PALETTE
    cell_width: int = 40
    cell_height: int = 20
    label_font_size: int = 11

    def __post_init__(self) -> None:
        if self.bands < 2:
            raise ConfigurationError("bands must be >= 2")
        if len(self.palette) != self.bands:
            raise ConfigurationError(
                f"palette length {len(self.palette)} != bands {self.bands}"
            )


def _write_text(path: str | Path, text: str, what: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {what} to {path}: {exc}") from exc


def write_scores_csv(scores: TopicScoreMatrix, path: str | Path) -> None:
    """Normalized scores as CSV: header ``topic_id,topic_name,<doc ids>``,
    one row per topic in model order, values with 6 decimal places."""
    if scores.normalized is None:
        raise ValueError("scores have not been normalized yet")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["topic_id", "topic_name", *scores.doc_ids])
    for ti, topic_id in enumerate(scores.topic_ids):
        row = [topic_id, scores.topic_names[ti]]
        row.extend(f"{v:.6f}" for v in scores.normalized[ti])
        writer.writerow(row)
    _write_text(path, buf.getvalue(), "scores CSV")


def write_coverage_json(
    coverage: CoverageReport, engagement: EngagementReport, path: str | Path
) -> None:
    """Coverage totals, per-keyword records, and engagement counts as JSON.

    Key order is fixed: coverage totals, keyword records (model order),
    then engagement (per-document counts in corpus order, zero-engagement
    topic list, per-topic zero-score document lists).
    """
    payload = {
        "coverage": {
            "total_keywords": coverage.total_keywords,
            "found_keywords": coverage.found_keywords,
            "absent_keywords": coverage.absent_keywords,
            "oversized_keywords": coverage.oversized_keywords,
            "keywords": [
                {
                    "topic": r.topic_id,
                    "phrase": r.phrase,
                    "canonical": r.canonical,
                    "status": r.status,
                }
                for r in coverage.records
            ],
        },
        "engagement": {
            "threshold": engagement.threshold,
            "per_document": [
                {
                    "doc": e.doc_id,
                    "engaged_topics": e.engaged_topics,
                    "engaged_goals": e.engaged_goals,
                }
                for e in engagement.per_document
            ],
            "zero_engagement_topics": list(engagement.unengaged_topics),
            "zero_score_documents_by_topic": {
                t: list(docs) for t, docs in engagement.zero_docs_by_topic.items()
            },
        },
    }
    _write_text(path, json.dumps(payload, indent=2, ensure_ascii=False) + "\n", "coverage JSON")


def _band_index(value: float, bands: int) -> int:
    """Left-closed right-open bands, the final band closed; v=1 -> last band."""
    return min(int(value * bands), bands - 1)


def render_heatmap_svg(
    scores: TopicScoreMatrix, spec: HeatmapSpec, path: str | Path
) -> None:
    """Topic x document heatmap: one colored rectangle per cell.

    Rows are topics in model order, columns documents in corpus order; the
    cell color is spec.palette[floor(v * bands)] with v = 1 mapping to the
    last band. Row labels are topic ids, column labels document ids, and a
    legend maps each band to its value range.
    """
    if scores.normalized is None:
        raise ValueError("scores have not been normalized yet")
    values = np.clip(scores.normalized, 0.0, 1.0)
    n_topics, n_docs = values.shape

    fs = spec.label_font_size
    left = 10 * fs  # room for topic ids
    top = 2 * fs
    col_label_h = 8 * fs
    legend_w = 12 * fs
    grid_w = n_docs * spec.cell_width
    grid_h = n_topics * spec.cell_height
    width = left + grid_w + legend_w + 2 * fs
    height = top + grid_h + col_label_h

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="{fs}">',
        '<rect width="100%" height="100%" fill="#ffffff"/>',
    ]
    # cells
    for ti in range(n_topics):
        y = top + ti * spec.cell_height
        for d in range(n_docs):
            x = left + d * spec.cell_width
            color = spec.palette[_band_index(float(values[ti, d]), spec.bands)]
            lines.append(
                f'<rect x="{x}" y="{y}" width="{spec.cell_width}" '
                f'height="{spec.cell_height}" fill="{color}" stroke="#dddddd" '
                'stroke-width="0.5"/>'
            )
    # row labels (topic ids), right-aligned next to the grid
    for ti, topic_id in enumerate(scores.topic_ids):
        y = top + ti * spec.cell_height + spec.cell_height * 0.5 + fs * 0.35
        lines.append(
            f'<text x="{left - 6}" y="{y:.1f}" text-anchor="end">{_esc(topic_id)}</text>'
        )
    # column labels (doc ids), rotated below the grid
    for d, doc_id in enumerate(scores.doc_ids):
        x = left + d * spec.cell_width + spec.cell_width * 0.5
        y = top + grid_h + fs
        lines.append(
            f'<text x="{x:.1f}" y="{y}" text-anchor="end" '
            f'transform="rotate(-60 {x:.1f} {y})">{_esc(doc_id)}</text>'
        )
    # legend: one swatch per band with its value range
    lx = left + grid_w + 2 * fs
    lines.append(f'<text x="{lx}" y="{top - 4}">score</text>')
    for b in range(spec.bands):
        y = top + b * (fs + 8)
        lo = b / spec.bands
        hi = (b + 1) / spec.bands
        closing = "]" if b == spec.bands - 1 else ")"
        lines.append(
            f'<rect x="{lx}" y="{y}" width="{fs + 4}" height="{fs + 4}" '
            f'fill="{spec.palette[b]}" stroke="#888888" stroke-width="0.5"/>'
        )
        lines.append(
            f'<text x="{lx + fs + 10}" y="{y + fs}">'
            f"[{lo:.2f}, {hi:.2f}{closing}</text>"
        )
    lines.append("</svg>")
    _write_text(path, "\n".join(lines) + "\n", "heatmap SVG")


def _esc(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )
