from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topicmine.errors import ConfigurationError, InputError
from topicmine.textproc import TokenizerConfig, process
from topicmine.topics import (
    MATCHED,
    OVERSIZED,
    Topic,
    TopicModel,
    canonicalize_keyword,
    canonicalize_model,
    default_sdg_model,
    load_topic_model,
    write_topic_model,
)


def write_model_file(tmp_path, payload) -> str:
    path = tmp_path / "vocab.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


class TestLoadTopicModel:
    def test_file_order_preserved(self, tmp_path):
        path = write_model_file(
            tmp_path,
            {
                "topics": [
                    {"id": "G1", "name": "One", "keywords": ["alpha"]},
                    {"id": "G2", "name": "Two", "keywords": ["beta"]},
                    {"id": "G3", "name": "Three", "keywords": ["gamma"]},
                ]
            },
        )
        model = load_topic_model(path)
        assert model.topic_ids == ("G1", "G2", "G3")

    def test_duplicate_topic_id_rejected(self, tmp_path):
        path = write_model_file(
            tmp_path,
            {
                "topics": [
                    {"id": "G1", "name": "One", "keywords": ["a"]},
                    {"id": "G1", "name": "Bis", "keywords": ["b"]},
                ]
            },
        )
        with pytest.raises(ConfigurationError, match="G1"):
            load_topic_model(path)

    def test_empty_keyword_list_rejected(self, tmp_path):
        path = write_model_file(
            tmp_path, {"topics": [{"id": "G1", "name": "One", "keywords": []}]}
        )
        with pytest.raises(ConfigurationError, match="G1"):
            load_topic_model(path)

    def test_missing_field_rejected(self, tmp_path):
        path = write_model_file(tmp_path, {"topics": [{"id": "G1", "keywords": ["a"]}]})
        with pytest.raises(ConfigurationError, match="name"):
            load_topic_model(path)

    def test_duplicate_phrase_within_topic_rejected(self, tmp_path):
        path = write_model_file(
            tmp_path,
            {"topics": [{"id": "G1", "name": "One", "keywords": ["Food", "food"]}]},
        )
        with pytest.raises(ConfigurationError, match="twice"):
            load_topic_model(path)

    def test_invalid_json_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ConfigurationError, match="JSON"):
            load_topic_model(str(path))

    def test_missing_file_is_input_error(self, tmp_path):
        with pytest.raises(InputError):
            load_topic_model(str(tmp_path / "absent.json"))


class TestDefaultModel:
    def test_seventeen_topics_without_g13(self):
        model = default_sdg_model()
        assert len(model) == 17
        expected = ["G0"] + [f"G{i}" for i in range(1, 13)] + [f"G{i}" for i in range(14, 18)]
        assert list(model.topic_ids) == expected
        assert "G13" not in model.topic_ids

    def test_overarching_topic_keywords(self):
        g0 = next(t for t in default_sdg_model() if t.id == "G0")
        assert g0.keywords == (
            "Sustainability",
            "Sustainable Development Goal",
            "SDG",
            "Agenda 2030",
        )

    def test_clean_energy_topic(self):
        g7 = next(t for t in default_sdg_model() if t.id == "G7")
        assert g7.keywords == ("Clean Energy", "green energy")

    def test_total_keyword_count(self):
        model = default_sdg_model()
        assert sum(len(t.keywords) for t in model) == 147

    def test_export_load_roundtrip(self, tmp_path):
        model = default_sdg_model()
        path = tmp_path / "exported.json"
        write_topic_model(model, path)
        assert load_topic_model(path) == model


class TestCanonicalizeKeyword:
    def test_single_token(self, tok_config):
        kw = canonicalize_keyword("Hunger", tok_config)
        assert kw.canonical == ("hunger",)
        assert kw.status == MATCHED
        assert kw.term == "hunger"

    def test_two_tokens_stemmed_and_joined(self, tok_config):
        kw = canonicalize_keyword("green energy", tok_config)
        assert kw.canonical == ("green", "energi")
        assert kw.status == MATCHED
        assert kw.term == "green energi"

    def test_three_surviving_tokens_is_oversized(self, tok_config):
        kw = canonicalize_keyword("Sustainable Development Goal", tok_config)
        assert kw.status == OVERSIZED
        assert kw.canonical == ("sustain", "develop", "goal")
        assert kw.term is None

    def test_all_stopwords_is_oversized_with_empty_canonical(self, tok_config):
        kw = canonicalize_keyword("of the", tok_config)
        assert kw.status == OVERSIZED
        assert kw.canonical == ()

    def test_stopword_inside_phrase_removed(self, tok_config):
        kw = canonicalize_keyword("cessation of hostilities", tok_config)
        assert kw.status == MATCHED
        assert kw.term == "cessat hostil"

    def test_below_ngram_min_is_oversized(self):
        config = TokenizerConfig(ngram_min=2, ngram_max=2)
        kw = canonicalize_keyword("Hunger", config)
        assert kw.status == OVERSIZED

    def test_empty_phrase_rejected(self, tok_config):
        with pytest.raises(ConfigurationError):
            canonicalize_keyword("", tok_config)


class TestCanonicalizeModel:
    def test_shared_stem_collapses_into_one_term(self, tok_config):
        model = TopicModel(
            topics=(
                Topic(id="T", name="t", keywords=("manufacture", "manufacturing")),
            )
        )
        canonical = canonicalize_model(model, tok_config)
        topic = canonical.topics[0]
        assert topic.terms == ("manufactur",)
        assert topic.matched_keyword_count == 2

    def test_oversized_keywords_excluded_from_terms(self, tok_config):
        model = TopicModel(
            topics=(
                Topic(
                    id="T",
                    name="t",
                    keywords=("hunger", "Sustainable Development Goal"),
                ),
            )
        )
        topic = canonicalize_model(model, tok_config).topics[0]
        assert topic.terms == ("hunger",)

    def test_default_model_oversized_list(self, tok_config):
        canonical = canonicalize_model(default_sdg_model(), tok_config)
        oversized = [
            kw.source_phrase
            for t in canonical
            for kw in t.keywords
            if kw.status == OVERSIZED
        ]
        assert oversized == ["Sustainable Development Goal", "hand-to-mouth existence"]

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_matched_keyword_embedded_verbatim_is_found(self, tok_config, data):
        canonical = canonicalize_model(default_sdg_model(), tok_config)
        matched = [
            kw
            for t in canonical
            for kw in t.keywords
            if kw.status == MATCHED
        ]
        kw = data.draw(st.sampled_from(matched))
        pad_left = data.draw(st.sampled_from(["", "Zzleft padding words.", "2030?"]))
        pad_right = data.draw(st.sampled_from(["", "zzright!", "the end."]))
        text = f"{pad_left} {kw.source_phrase} {pad_right}"
        assert kw.term in process(text, tok_config)
