"""Keyword-hit topic scoring over transcript hypotheses."""

from __future__ import annotations

import re
from dataclasses import dataclass

from speechforge.vocab import TopicVocabulary

_TOKEN_RE = re.compile(r"[a-z0-9']+")


def tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.lower())


@dataclass(frozen=True)
class TopicScore:
    topic: str
    score: float


def _phrase_hits(tokens: list[str], phrase: tuple[str, ...]) -> int:
    if len(phrase) == 1:
        return sum(1 for t in tokens if t == phrase[0])
    n = len(phrase)
    count = 0
    for i in range(len(tokens) - n + 1):
        if tuple(tokens[i : i + n]) == phrase:
            count += 1
    return count


def detect_topics(transcript: str | list[str], vocab: TopicVocabulary) -> list[TopicScore]:
    """Rank categories by normalized keyword hits.

    Score is hits per transcript token; zero-score categories are dropped and
    ties break by vocabulary order. An empty transcript yields an empty list.
    """
    tokens = tokenize(transcript) if isinstance(transcript, str) else [t.lower() for t in transcript]
    if not tokens:
        return []
    scored: list[tuple[float, int, str]] = []
    for index, category in enumerate(vocab.categories):
        terms = {category.name, *category.keywords}
        hits = 0
        for term in terms:
            phrase = tuple(tokenize(term))
            if phrase:
                hits += _phrase_hits(tokens, phrase)
        if hits:
            scored.append((hits / len(tokens), index, category.name))
    scored.sort(key=lambda item: (-item[0], item[1]))
    return [TopicScore(topic=name, score=score) for score, _, name in scored]
