from __future__ import annotations

import json

import pytest

from topicmine.cli import main
from topicmine.topics import default_sdg_model, load_topic_model

RESULT_FILES = ("config.json", "scores.csv", "coverage.json", "heatmap.svg")


def run_cli(*args: str) -> int:
    return main(list(args))


class TestHappyPath:
    def test_directory_input_writes_four_files(self, corpus_dir, tmp_path):
        out = tmp_path / "out"
        assert run_cli("--input", str(corpus_dir), "--output-dir", str(out)) == 0
        assert sorted(p.name for p in out.iterdir()) == sorted(RESULT_FILES)

    def test_dump_matrix_adds_fifth_file(self, corpus_dir, tmp_path):
        out = tmp_path / "out"
        code = run_cli(
            "--input", str(corpus_dir), "--output-dir", str(out), "--dump-matrix"
        )
        assert code == 0
        assert (out / "tfidf_matrix.csv").exists()

    def test_manifest_wins_over_input(self, corpus_dir, tmp_path):
        manifest = tmp_path / "m.tsv"
        manifest.write_text(f"solo\t{corpus_dir / 'd1.txt'}\n", encoding="utf-8")
        out = tmp_path / "out"
        code = run_cli(
            "--input", str(corpus_dir),
            "--manifest", str(manifest),
            "--output-dir", str(out),
        )
        assert code == 0
        header = (out / "scores.csv").read_text("utf-8").splitlines()[0]
        assert header == "topic_id,topic_name,solo"

    def test_config_echo_materializes_defaults(self, corpus_dir, tmp_path):
        out = tmp_path / "out"
        run_cli("--input", str(corpus_dir), "--output-dir", str(out))
        echo = json.loads((out / "config.json").read_text("utf-8"))
        assert echo["vocabulary"] == "builtin:sdg"
        assert echo["stopwords"] == "builtin:default"
        assert echo["ngram_min"] == 1
        assert echo["ngram_max"] == 2
        assert echo["min_token_len"] == 2
        assert echo["normalize"] == "global-max"
        assert echo["aggregate"] == "sum"
        assert echo["engagement_threshold"] == 0.0
        assert echo["bands"] == 5
        assert len(echo["palette"]) == 5
        assert echo["jobs"] == 1
        assert [d[0] for d in echo["documents"]] == ["d1", "d2", "d3"]

    def test_custom_vocabulary_and_modes(self, corpus_dir, tmp_path):
        vocab = tmp_path / "vocab.json"
        vocab.write_text(
            json.dumps(
                {
                    "topics": [
                        {"id": "T1", "name": "Food", "keywords": ["food", "famine"]},
                        {"id": "T2", "name": "Energy", "keywords": ["green energy"]},
                    ]
                }
            ),
            encoding="utf-8",
        )
        out = tmp_path / "out"
        code = run_cli(
            "--input", str(corpus_dir),
            "--vocabulary", str(vocab),
            "--normalize", "per-doc-max",
            "--aggregate", "mean",
            "--bands", "7",
            "--output-dir", str(out),
        )
        assert code == 0
        lines = (out / "scores.csv").read_text("utf-8").splitlines()
        assert len(lines) == 3  # header + 2 topics
        echo = json.loads((out / "config.json").read_text("utf-8"))
        assert echo["bands"] == 7
        assert len(echo["palette"]) == 7


class TestErrorPaths:
    def test_missing_input_directory_exits_2(self, tmp_path):
        code = run_cli(
            "--input", str(tmp_path / "absent"), "--output-dir", str(tmp_path / "out")
        )
        assert code == 2

    def test_no_input_at_all_exits_3(self, tmp_path):
        assert run_cli("--output-dir", str(tmp_path / "out")) == 3

    def test_missing_output_dir_flag_exits_3(self, corpus_dir):
        assert run_cli("--input", str(corpus_dir)) == 3

    def test_bad_vocabulary_exits_3(self, corpus_dir, tmp_path):
        vocab = tmp_path / "broken.json"
        vocab.write_text("{", encoding="utf-8")
        code = run_cli(
            "--input", str(corpus_dir),
            "--vocabulary", str(vocab),
            "--output-dir", str(tmp_path / "out"),
        )
        assert code == 3

    def test_duplicate_manifest_ids_exit_3(self, corpus_dir, tmp_path):
        manifest = tmp_path / "m.tsv"
        manifest.write_text(
            f"x\t{corpus_dir / 'd1.txt'}\nx\t{corpus_dir / 'd2.txt'}\n",
            encoding="utf-8",
        )
        code = run_cli(
            "--manifest", str(manifest), "--output-dir", str(tmp_path / "out")
        )
        assert code == 3

    def test_invalid_choice_exits_3(self, corpus_dir, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            run_cli(
                "--input", str(corpus_dir),
                "--normalize", "sideways",
                "--output-dir", str(tmp_path / "out"),
            )
        assert excinfo.value.code == 3

    def test_unwritable_output_exits_4_and_removes_partials(self, corpus_dir, tmp_path):
        out = tmp_path / "out"
        out.mkdir()
        (out / "heatmap.svg").mkdir()  # writing the SVG will fail
        code = run_cli("--input", str(corpus_dir), "--output-dir", str(out))
        assert code == 4
        # earlier outputs from the failed run were cleaned up
        assert not (out / "scores.csv").exists()
        assert not (out / "coverage.json").exists()
        assert not (out / "config.json").exists()

    def test_empty_corpus_after_processing_exits_2(self, tmp_path):
        docs = tmp_path / "docs"
        docs.mkdir()
        (docs / "only.txt").write_text("and the towards of", encoding="utf-8")
        code = run_cli("--input", str(docs), "--output-dir", str(tmp_path / "out"))
        assert code == 2


class TestExports:
    def test_export_default_vocabulary_roundtrip(self, tmp_path):
        path = tmp_path / "sdg.json"
        assert run_cli("--export-default-vocabulary", str(path)) == 0
        model = load_topic_model(path)
        assert model == default_sdg_model()
        assert len(model) == 17
        g0 = model.topics[0]
        assert "SDG" in g0.keywords

    def test_export_default_stopwords(self, tmp_path):
        path = tmp_path / "stops.txt"
        assert run_cli("--export-default-stopwords", str(path)) == 0
        words = path.read_text("utf-8").split()
        assert "the" in words
        assert "and" in words
        assert "towards" in words

    def test_export_to_unwritable_path_exits_4(self, tmp_path):
        code = run_cli(
            "--export-default-vocabulary", str(tmp_path / "no" / "sdg.json")
        )
        assert code == 4


class TestDeterminism:
    def test_identical_runs_byte_identical(self, corpus_dir, tmp_path):
        out_a, out_b = tmp_path / "a", tmp_path / "b"
        for out in (out_a, out_b):
            assert run_cli("--input", str(corpus_dir), "--output-dir", str(out)) == 0
        for name in RESULT_FILES:
            if name == "config.json":
                continue  # echoes the differing --output-dir
            assert (out_a / name).read_bytes() == (out_b / name).read_bytes()

    def test_parallelism_does_not_change_outputs(self, corpus_dir, tmp_path):
        out_1, out_n = tmp_path / "j1", tmp_path / "jn"
        assert run_cli(
            "--input", str(corpus_dir), "--output-dir", str(out_1), "--jobs", "1"
        ) == 0
        assert run_cli(
            "--input", str(corpus_dir), "--output-dir", str(out_n), "--jobs", "4"
        ) == 0
        for name in ("scores.csv", "coverage.json", "heatmap.svg"):
            assert (out_1 / name).read_bytes() == (out_n / name).read_bytes()
