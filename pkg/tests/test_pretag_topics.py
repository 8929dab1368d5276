from __future__ import annotations

import pytest

from speechforge.pretag import detect_topics
from speechforge.vocab import DEFAULT_VOCABULARY, TopicVocabulary


def test_sports_keywords_rank_first():
    ranked = detect_topics("westbrook rebounds assists nba", DEFAULT_VOCABULARY)
    assert ranked and ranked[0].topic == "sports"


def test_empty_transcript():
    assert detect_topics("", DEFAULT_VOCABULARY) == []
    assert detect_topics([], DEFAULT_VOCABULARY) == []


def test_planted_counts_rank_order():
    vocab = TopicVocabulary.from_mapping(
        {"alpha": ["apple"], "beta": ["berry"], "gamma": ["grape"]}
    )
    doc = " ".join(["apple"] * 5 + ["berry"] * 3 + ["grape"] * 1 + ["filler"] * 11)
    ranked = detect_topics(doc, vocab)
    assert [t.topic for t in ranked] == ["alpha", "beta", "gamma"]
    # hand-computed: hits / token count over 20 tokens
    assert ranked[0].score == pytest.approx(5 / 20)
    assert ranked[1].score == pytest.approx(3 / 20)
    assert ranked[2].score == pytest.approx(1 / 20)


def test_tie_broken_by_vocabulary_order():
    vocab = TopicVocabulary.from_mapping({"zeta": ["zz"], "alpha": ["aa"]})
    ranked = detect_topics("zz aa", vocab)
    assert [t.topic for t in ranked] == ["zeta", "alpha"]


def test_multiword_keyword_phrase_match():
    vocab = TopicVocabulary.from_mapping({"tech": ["machine learning"]})
    ranked = detect_topics("we love machine learning and machine tools", vocab)
    assert ranked and ranked[0].topic == "tech"
    assert ranked[0].score == pytest.approx(1 / 7)


def test_category_name_counts_as_keyword():
    ranked = detect_topics("the weather segment mentioned weather twice", DEFAULT_VOCABULARY)
    assert ranked[0].topic == "weather"
