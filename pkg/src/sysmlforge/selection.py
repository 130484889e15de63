"""Candidate key phrases, phrase scoring and key-relationship selection.

A candidate phrase is the noun-lemma skeleton of a relation's subject or
object, intersected with the document's key nouns and trimmed to the
configured maximum length.  Each candidate scores

    score = mean(tf-idf weight) + mean(WordNet score) + normalized count

and phrases above the score threshold become key phrases.  A relation is
key only when both of its endpoint phrases are key phrases, which is what
keeps floating blocks out of the diagrams.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .preprocess import noun_lemmas
from .relex import ExtractedRelation
from .weighting import DocumentWeights, weight_of
from .wordnet import SenseInfo, WordNetDB


@dataclass(frozen=True)
class Phrase:
    """Ordered noun lemmas; identity is the lemma sequence."""

    lemmas: tuple[str, ...]

    @property
    def name(self) -> str:
        return " ".join(self.lemmas)

    def __len__(self) -> int:
        return len(self.lemmas)


@dataclass(frozen=True)
class ScoredPhrase:
    phrase: Phrase
    avg_w: float
    avg_h: float
    count_norm: float

    @property
    def score(self) -> float:
        """The additive selection score (tf-idf + WordNet + frequency)."""
        return self.avg_w + self.avg_h + self.count_norm


@dataclass(frozen=True)
class KeyRelation:
    source: ExtractedRelation
    subject_phrase: Phrase
    object_phrase: Phrase


def candidate_phrase(
    raw_phrase: str,
    key_nouns: set[str],
    l_phrase: int,
    weights: DocumentWeights,
    db: WordNetDB,
    phrase_nouns: Sequence[str] | None = None,
) -> Phrase | None:
    """Noun-lemma candidate for one raw subject/object phrase.

    Preprocesses the phrase, drops nouns outside the key-noun set, and on
    overflow keeps the ``l_phrase`` highest-weighted nouns in their
    original order.  None when nothing survives.  ``phrase_nouns`` skips
    re-preprocessing when the caller already holds the noun lemmas.
    """
    if phrase_nouns is None:
        phrase_nouns = noun_lemmas(raw_phrase, db)
    lemmas = [t for t in phrase_nouns if t in key_nouns]
    if not lemmas:
        return None
    if len(lemmas) > l_phrase:
        ranked = sorted(range(len(lemmas)), key=lambda i: (-weight_of(weights, lemmas[i]), i))
        keep = sorted(ranked[:l_phrase])
        lemmas = [lemmas[i] for i in keep]
    return Phrase(lemmas=tuple(lemmas))


def candidate_bag(
    relations: Iterable[ExtractedRelation],
    resolve: Callable[[str], Phrase | None],
) -> Counter:
    """Multiset of resolved candidate phrases over every subject and
    object of the document's relations."""
    bag: Counter = Counter()
    for rel in relations:
        for raw in (rel.subject, rel.object):
            phrase = resolve(raw)
            if phrase is not None:
                bag[phrase] += 1
    return bag


def score_phrase(
    phrase: Phrase,
    weights: DocumentWeights,
    senses: Mapping[str, SenseInfo],
    count_norm: float,
) -> ScoredPhrase:
    n = len(phrase.lemmas)
    avg_w = sum(weight_of(weights, t) for t in phrase.lemmas) / n
    avg_h = sum(senses[t].wn_score for t in phrase.lemmas) / n
    return ScoredPhrase(phrase=phrase, avg_w=avg_w, avg_h=avg_h, count_norm=count_norm)


def score_candidates(
    bag: Counter,
    weights: DocumentWeights,
    senses: Mapping[str, SenseInfo],
) -> list[ScoredPhrase]:
    """Score every candidate; counts normalize against the most frequent
    phrase of the document."""
    if not bag:
        return []
    max_count = max(bag.values())
    scored = [
        score_phrase(phrase, weights, senses, count / max_count)
        for phrase, count in bag.items()
    ]
    scored.sort(key=lambda s: (-s.score, s.phrase.lemmas))
    return scored


def select_key_phrases(candidates: Iterable[ScoredPhrase], sigma_p: float) -> set[Phrase]:
    """Phrases scoring strictly above the threshold."""
    return {c.phrase for c in candidates if c.score > sigma_p}


def select_key_relations(
    relations: Iterable[ExtractedRelation],
    key_phrases: set[Phrase],
    resolve: Callable[[str], Phrase | None],
) -> list[KeyRelation]:
    """Relations whose subject and object both resolve to key phrases."""
    out: list[KeyRelation] = []
    for rel in relations:
        subject = resolve(rel.subject)
        obj = resolve(rel.object)
        if subject is None or obj is None:
            continue
        if subject in key_phrases and obj in key_phrases:
            out.append(KeyRelation(source=rel, subject_phrase=subject, object_phrase=obj))
    return out


def make_resolver(
    key_nouns: set[str],
    l_phrase: int,
    weights: DocumentWeights,
    db: WordNetDB,
) -> Callable[[str], Phrase | None]:
    """Memoized candidate resolution for one document and parameter set."""
    cache: dict[str, Phrase | None] = {}

    def resolve(raw: str) -> Phrase | None:
        if raw not in cache:
            cache[raw] = candidate_phrase(raw, key_nouns, l_phrase, weights, db)
        return cache[raw]

    return resolve
