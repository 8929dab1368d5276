"""Topic vocabulary: seed categories with keyword lists.

The default vocabulary carries twenty top-level categories. Keyword lists do
double duty: they drive transcript topic scoring, and they define which topic
strings count as "known" in metadata validation (a string is known when it
names a category or appears in a category's keyword list).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class TopicCategory:
    name: str
    keywords: tuple[str, ...]


# Category names are normalized to lowercase; keyword lists are seeds, not
# exhaustive lexicons, and are meant to be replaced per deployment.
_DEFAULT_CATEGORIES: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("clothing", ("fashion", "dress", "shirt", "shoes", "wear", "jacket", "jeans", "style", "outfit", "fabric", "tailor")),
    ("culture", ("art", "museum", "heritage", "tradition", "festival", "painting", "theatre", "literature", "poetry", "dance", "exhibition")),
    ("education", ("school", "student", "teacher", "university", "classroom", "exam", "homework", "college", "degree", "lecture", "curriculum")),
    ("finance", ("money", "bank", "stock", "market", "investment", "loan", "interest", "economy", "budget", "tax", "credit", "trading")),
    ("food", ("recipe", "restaurant", "cooking", "meal", "dinner", "lunch", "breakfast", "chef", "cuisine", "dish", "ingredients", "baking")),
    ("health", ("doctor", "hospital", "medicine", "disease", "patient", "vaccine", "fitness", "diet", "symptoms", "therapy", "wellness")),
    ("history", ("ancient", "war", "empire", "century", "historical", "archive", "dynasty", "revolution", "medieval", "archaeology")),
    ("hospitality", ("hotel", "resort", "guest", "booking", "reception", "lodging", "concierge", "accommodation", "suite", "innkeeper")),
    ("information and technology", ("technology", "software", "computer", "internet", "data", "programming", "hardware", "digital", "network", "cloud", "algorithm", "startup", "tech")),
    ("insurance", ("policy", "premium", "claim", "coverage", "deductible", "insurer", "liability", "underwriting", "actuary")),
    ("legal", ("law", "court", "judge", "lawyer", "attorney", "contract", "lawsuit", "verdict", "justice", "legislation", "trial")),
    ("leisure time", ("leisure", "hobby", "relaxation", "weekend", "camping", "picnic", "gardening", "hiking", "crafts", "puzzle")),
    ("entertainment", ("movie", "film", "music", "concert", "television", "tv", "show", "celebrity", "album", "cinema", "series", "news")),
    ("retail", ("store", "shopping", "shop", "customer", "price", "discount", "sale", "mall", "checkout", "merchandise", "brand")),
    ("social networks", ("social", "facebook", "twitter", "instagram", "followers", "post", "tweet", "influencer", "profile", "hashtag", "viral")),
    ("sports", ("basketball", "nba", "football", "soccer", "baseball", "game", "team", "score", "win", "league", "player", "match", "season", "rebounds", "assists", "points", "championship", "tournament")),
    ("telecommunication", ("telecom", "phone", "mobile", "carrier", "broadband", "wireless", "roaming", "signal", "cellular", "bandwidth")),
    ("travel/holiday", ("travel", "holiday", "vacation", "flight", "airport", "tourist", "destination", "itinerary", "passport", "cruise", "sightseeing")),
    ("weather", ("rain", "temperature", "forecast", "storm", "sunny", "snow", "wind", "humidity", "cloudy", "thunder")),
    ("work", ("job", "career", "office", "employee", "salary", "interview", "hiring", "manager", "workplace", "resume", "profession")),
)


@dataclass(frozen=True)
class TopicVocabulary:
    """Ordered set of topic categories; order breaks scoring ties."""

    categories: tuple[TopicCategory, ...]

    def __post_init__(self) -> None:
        names = [c.name for c in self.categories]
        if len(set(names)) != len(names):
            raise ValueError("duplicate category names in topic vocabulary")

    @classmethod
    def default(cls) -> "TopicVocabulary":
        return cls(tuple(TopicCategory(name, kws) for name, kws in _DEFAULT_CATEGORIES))

    @classmethod
    def from_mapping(cls, mapping: dict[str, list[str]]) -> "TopicVocabulary":
        return cls(tuple(TopicCategory(name, tuple(kws)) for name, kws in mapping.items()))

    @classmethod
    def from_json_file(cls, path: str | Path) -> "TopicVocabulary":
        with open(path, encoding="utf-8") as fh:
            return cls.from_mapping(json.load(fh))

    def category_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.categories)

    def known_terms(self) -> frozenset[str]:
        """Category names plus every keyword, lowercased."""
        terms: set[str] = set()
        for cat in self.categories:
            terms.add(cat.name.lower())
            terms.update(k.lower() for k in cat.keywords)
        return frozenset(terms)

    def is_known(self, topic: str) -> bool:
        return topic.lower() in self.known_terms()


DEFAULT_VOCABULARY = TopicVocabulary.default()
