"""Open-domain relation tuple extraction from tagged sentences.

A pattern extractor replaces the learned-model toolbox the approach was
first built on; the downstream contract is identical: every tuple is an
ordered phrase list ``(subject, relation, object, secondary...)`` with a
confidence in [0, 1].  Three pattern families fire per sentence:

* verb-mediated: subject NP, relation verb group (optionally with a noun
  infix and preposition), object NP;
* relational-noun: title runs like ``Rowing Club President James`` and
  appositions like ``James, President of the Rowing Club``;
* numerical: ``X has <number> <nouns>`` forms.

Extraction is stateless per sentence and embarrassingly parallel.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .corpus import Document
from .preprocess import (
    NOUN_TAGS,
    VERB_TAGS,
    SentenceView,
    split_sentences,
    tag_sentence,
)
from .wordnet import WordNetDB

BE_FORMS = frozenset({"be", "am", "is", "are", "was", "were", "been", "being"})
CLAUSE_BOUNDARY_TAGS = frozenset({",", ":", "WDT", "WP"})
NUMERIC_VERBS = frozenset({"has", "have", "had", "contains", "contain", "includes", "include"})
RELATIONAL_NOUNS = frozenset(
    {
        "president", "director", "chairman", "chairwoman", "ceo", "head",
        "founder", "cofounder", "member", "manager", "minister", "secretary",
        "capital", "author", "owner", "leader", "editor", "professor",
        "chancellor", "governor", "mayor", "king", "queen", "captain",
        "chief", "commander", "coach", "dean",
    }
)

VERB_MEDIATED_BASE = 0.9
PATTERN_FIXED_CONFIDENCE = 0.7
CONFIDENCE_FLOOR = 0.3
CLAUSE_PENALTY = 0.1
PASSIVE_PENALTY = 0.1


@dataclass(frozen=True)
class ExtractedRelation:
    """Ordered tuple (p1..pN): subject, relation phrase, object, extras."""

    phrases: tuple[str, ...]
    confidence: float
    sentence_index: int
    document_id: str

    @property
    def subject(self) -> str:
        return self.phrases[0]

    @property
    def relation(self) -> str:
        return self.phrases[1]

    @property
    def object(self) -> str:
        return self.phrases[2]

    def as_dict(self) -> dict:
        return {
            "phrases": list(self.phrases),
            "confidence": self.confidence,
            "sentence_index": self.sentence_index,
            "document_id": self.document_id,
        }

    @staticmethod
    def from_dict(data: dict) -> "ExtractedRelation":
        return ExtractedRelation(
            phrases=tuple(data["phrases"]),
            confidence=float(data["confidence"]),
            sentence_index=int(data["sentence_index"]),
            document_id=str(data["document_id"]),
        )


@dataclass(frozen=True)
class ExtractionStats:
    sentence_count: int
    failed_sentences: int

    @property
    def failure_ratio(self) -> float:
        return self.failed_sentences / max(self.sentence_count, 1)


# -- chunking ----------------------------------------------------------------

NP_MOD_TAGS = frozenset({"CD", "JJ", "JJR", "JJS", "VBN", "VBG"})


def _noun_chunks(tags: Sequence[str]) -> list[tuple[int, int]]:
    """Spans of noun phrases: (DT|PRP$)? modifiers* noun+, plus bare PRP
    and bare CD chunks."""
    chunks: list[tuple[int, int]] = []
    i = 0
    n = len(tags)
    while i < n:
        if tags[i] == "PRP":
            chunks.append((i, i + 1))
            i += 1
            continue
        start = i
        j = i
        if tags[j] in ("DT", "PRP$"):
            j += 1
        while j < n and tags[j] in NP_MOD_TAGS:
            j += 1
        if j < n and tags[j] in NOUN_TAGS:
            while j < n and tags[j] in NOUN_TAGS:
                j += 1
            chunks.append((start, j))
            i = j
            continue
        if tags[i] == "CD":
            j = i
            while j < n and tags[j] == "CD":
                j += 1
            chunks.append((i, j))
            i = j
            continue
        i += 1
    return chunks


def _verb_groups(tags: Sequence[str]) -> list[tuple[int, int]]:
    """Maximal verb runs (with modal/adverb/particle glue), >= 1 verb tag."""
    groups: list[tuple[int, int]] = []
    i = 0
    n = len(tags)
    while i < n:
        if tags[i] in VERB_TAGS or (tags[i] == "MD" and i + 1 < n and tags[i + 1] in VERB_TAGS | {"RB"}):
            start = i
            j = i
            while j < n and (tags[j] in VERB_TAGS or tags[j] in ("MD", "RB", "RP")):
                j += 1
            while j - 1 > start and tags[j - 1] == "RB":
                j -= 1
            if any(tags[k] in VERB_TAGS for k in range(start, j)):
                groups.append((start, j))
            i = j
        else:
            i += 1
    return groups


def _span_text(surfaces: Sequence[str], span: tuple[int, int]) -> str:
    return " ".join(surfaces[span[0] : span[1]])


def _chunk_ending_before(chunks: list[tuple[int, int]], position: int) -> tuple[int, int] | None:
    before = [c for c in chunks if c[1] <= position]
    return before[-1] if before else None


def _chunk_starting_at(chunks: list[tuple[int, int]], position: int, tags: Sequence[str]) -> tuple[int, int] | None:
    n = len(tags)
    while position < n and tags[position] == "RB":
        position += 1
    for chunk in chunks:
        if chunk[0] == position:
            return chunk
    return None


# -- pattern families ----------------------------------------------------------


def _verb_confidence(tags: Sequence[str], surfaces: Sequence[str], subject: tuple[int, int], group: tuple[int, int]) -> float:
    confidence = VERB_MEDIATED_BASE
    for k in range(subject[1], group[0]):
        if tags[k] in CLAUSE_BOUNDARY_TAGS or surfaces[k].lower() in ("that", "which", "who"):
            confidence -= CLAUSE_PENALTY
    group_tags = tags[group[0] : group[1]]
    group_words = [s.lower() for s in surfaces[group[0] : group[1]]]
    if "VBN" in group_tags and any(w in BE_FORMS for w in group_words):
        confidence -= PASSIVE_PENALTY
    return max(confidence, CONFIDENCE_FLOOR)


def _trailing_args(
    surfaces: Sequence[str], tags: Sequence[str], chunks: list[tuple[int, int]], position: int
) -> list[str]:
    """Up to three prepositional phrases after the object become p4.."""
    out: list[str] = []
    n = len(tags)
    while len(out) < 3 and position < n and tags[position] in ("IN", "TO"):
        chunk = _chunk_starting_at(chunks, position + 1, tags)
        if chunk is None:
            break
        out.append(f"{surfaces[position]} {_span_text(surfaces, chunk)}")
        position = chunk[1]
    return out


def _verb_mediated(sentence: SentenceView, surfaces, tags, chunks) -> list[tuple[tuple[str, ...], float]]:
    results = []
    for group in _verb_groups(tags):
        subject = _chunk_ending_before(chunks, group[0])
        if subject is None:
            continue
        relation_end = group[1]
        # plain object directly after the verb group
        obj = _chunk_starting_at(chunks, relation_end, tags)
        confidence = _verb_confidence(tags, surfaces, subject, group)
        if obj is not None:
            phrases = [
                _span_text(surfaces, subject),
                _span_text(surfaces, group),
                _span_text(surfaces, obj),
            ]
            phrases.extend(_trailing_args(surfaces, tags, chunks, obj[1]))
            results.append((tuple(phrases), confidence))
            infix = obj
        else:
            infix = None
        # verb (+ optional noun infix) + preposition + object
        probe = infix[1] if infix is not None else relation_end
        if probe < len(tags) and tags[probe] in ("IN", "TO", "RP"):
            far_obj = _chunk_starting_at(chunks, probe + 1, tags)
            if far_obj is not None:
                phrases = [
                    _span_text(surfaces, subject),
                    " ".join(surfaces[group[0] : probe + 1]),
                    _span_text(surfaces, far_obj),
                ]
                phrases.extend(_trailing_args(surfaces, tags, chunks, far_obj[1]))
                results.append((tuple(phrases), confidence))
    return results


def _relational_noun(sentence: SentenceView, surfaces, tags, chunks) -> list[tuple[tuple[str, ...], float]]:
    results = []
    n = len(tags)
    for i, surface in enumerate(surfaces):
        if surface.lower() not in RELATIONAL_NOUNS or tags[i] not in NOUN_TAGS:
            continue
        # title run: <NounRun> RelNoun <ProperRun>
        left_start = i
        while left_start > 0 and tags[left_start - 1] in NOUN_TAGS:
            left_start -= 1
        right_end = i + 1
        while right_end < n and tags[right_end] == "NNP":
            right_end += 1
        if left_start < i and right_end > i + 1:
            holder = " ".join(surfaces[i + 1 : right_end])
            entity = " ".join(surfaces[left_start:i])
            results.append(((holder, f"be {surface} of", entity), PATTERN_FIXED_CONFIDENCE))
            continue
        # apposition: <NP> , (the)? RelNoun of <NP>
        if i + 1 < n and surfaces[i + 1].lower() == "of":
            obj = _chunk_starting_at(chunks, i + 2, tags)
            np_start = i
            if np_start > 0 and tags[np_start - 1] == "DT":
                np_start -= 1
            holder_chunk = _chunk_ending_before(chunks, np_start)
            if obj is not None and holder_chunk is not None:
                results.append(
                    (
                        (
                            _span_text(surfaces, holder_chunk),
                            f"be {surface} of",
                            _span_text(surfaces, obj),
                        ),
                        PATTERN_FIXED_CONFIDENCE,
                    )
                )
    return results


def _numerical(sentence: SentenceView, surfaces, tags, chunks) -> list[tuple[tuple[str, ...], float]]:
    results = []
    n = len(tags)
    for i, surface in enumerate(surfaces):
        if surface.lower() not in NUMERIC_VERBS or tags[i] not in VERB_TAGS:
            continue
        if i + 1 >= n or tags[i + 1] != "CD":
            continue
        number_end = i + 1
        while number_end < n and tags[number_end] == "CD":
            number_end += 1
        noun_end = number_end
        while noun_end < n and tags[noun_end] in NOUN_TAGS:
            noun_end += 1
        if noun_end == number_end:
            continue
        subject = _chunk_ending_before(chunks, i)
        if subject is None:
            continue
        counted = " ".join(surfaces[number_end:noun_end])
        results.append(
            (
                (
                    _span_text(surfaces, subject),
                    f"{surface} number of {counted}",
                    " ".join(surfaces[i + 1 : number_end]),
                ),
                PATTERN_FIXED_CONFIDENCE,
            )
        )
    return results


def extract_relations(sentence: SentenceView) -> list[ExtractedRelation]:
    """All pattern matches of one tagged sentence, deduplicated on
    (subject, relation, object) keeping the highest confidence."""
    if not sentence.tokens:
        raise ValueError("sentence must be tokenized and tagged first")
    surfaces = [t.surface for t in sentence.tokens]
    tags = [t.pos for t in sentence.tokens]
    chunks = _noun_chunks(tags)
    candidates: list[tuple[tuple[str, ...], float]] = []
    candidates.extend(_verb_mediated(sentence, surfaces, tags, chunks))
    candidates.extend(_relational_noun(sentence, surfaces, tags, chunks))
    candidates.extend(_numerical(sentence, surfaces, tags, chunks))

    best: dict[tuple[str, str, str], tuple[tuple[str, ...], float]] = {}
    order: list[tuple[str, str, str]] = []
    for phrases, confidence in candidates:
        if not phrases[0] or not phrases[2]:
            continue
        key = (phrases[0], phrases[1], phrases[2])
        if key not in best:
            best[key] = (phrases, confidence)
            order.append(key)
        elif confidence > best[key][1] or (
            confidence == best[key][1] and len(phrases) > len(best[key][0])
        ):
            best[key] = (phrases, confidence)
    return [
        ExtractedRelation(
            phrases=best[key][0],
            confidence=round(best[key][1], 6),
            sentence_index=sentence.index,
            document_id="",
        )
        for key in order
    ]


# -- conjunction splitting -----------------------------------------------------


def _detokenize(surfaces: Sequence[str]) -> str:
    text = " ".join(surfaces)
    text = re.sub(r" ([.,:;!?%)\]])", r"\1", text)
    text = re.sub(r"([(\[]) ", r"\1", text)
    text = re.sub(r" ('s|n't|'re|'ll|'ve|'m|'d)\b", r"\1", text)
    return text.strip()


def _has_clause(tags: Sequence[str]) -> bool:
    noun_seen = False
    for tag in tags:
        if tag in NOUN_TAGS or tag == "PRP":
            noun_seen = True
        if tag in VERB_TAGS and noun_seen:
            return True
    return False


def _split_once(surfaces: list[str], tags: list[str]) -> list[list[str]] | None:
    n = len(tags)
    chunks = _noun_chunks(tags)
    verb_groups = _verb_groups(tags)
    for c in range(1, n - 1):
        if tags[c] != "CC" or surfaces[c].lower() not in ("and", "or"):
            continue
        left_tags, right_tags = tags[:c], tags[c + 1 :]
        # clause coordination: a full subject-verb clause on both sides
        if _has_clause(left_tags) and _has_clause(right_tags):
            left = surfaces[:c]
            if left and left[-1] == ",":
                left = left[:-1]
            return [left, surfaces[c + 1 :]]
        # verb-phrase coordination: shared subject and shared tail
        v1 = next((g for g in verb_groups if g[1] == c), None)
        v2 = next((g for g in verb_groups if g[0] == c + 1), None)
        if v1 is not None and v2 is not None and v1[0] > 0:
            return [
                surfaces[:c] + surfaces[v2[1] :],
                surfaces[: v1[0]] + surfaces[c + 1 :],
            ]
        # noun-phrase coordination: distribute over the shared context
        np1 = next((ch for ch in chunks if ch[1] == c), None)
        np2 = next((ch for ch in chunks if ch[0] == c + 1), None)
        if np1 is not None and np2 is not None:
            return [
                surfaces[:c] + surfaces[np2[1] :],
                surfaces[: np1[0]] + surfaces[c + 1 :],
            ]
    return None


def split_conjunctions(sentence: SentenceView, db: WordNetDB | None = None) -> list[SentenceView]:
    """Distribute coordinated clauses, verb phrases and noun phrases into
    simple sentences; non-conjunctive input comes back as a singleton."""
    if not sentence.tokens:
        sentence = tag_sentence(sentence, db)

    def expand(surfaces: list[str], tags: list[str], depth: int) -> list[list[str]]:
        if depth >= 4:
            return [surfaces]
        split = _split_once(surfaces, tags)
        if split is None:
            return [surfaces]
        out: list[list[str]] = []
        for part in split:
            if not part:
                continue
            retagged = tag_sentence(SentenceView(index=sentence.index, text=_detokenize(part)), db)
            out.extend(expand([t.surface for t in retagged.tokens], [t.pos for t in retagged.tokens], depth + 1))
        return out

    surfaces = [t.surface for t in sentence.tokens]
    tags = [t.pos for t in sentence.tokens]
    pieces = expand(surfaces, tags, 0)
    if len(pieces) == 1:
        return [sentence]
    views = []
    for piece in pieces:
        text = _detokenize(piece)
        text = text[:1].upper() + text[1:]
        if not text.endswith((".", "!", "?")):
            text += "."
        views.append(tag_sentence(SentenceView(index=sentence.index, text=text), db))
    return views


# -- document driver -------------------------------------------------------------


def extract_document(doc: Document, db: WordNetDB) -> tuple[list[ExtractedRelation], int]:
    """All relation tuples of a document (pre-threshold) plus its sentence
    count.  Tuples from conjunction-split variants keep the index of the
    originating sentence."""
    relations: list[ExtractedRelation] = []
    best: dict[tuple[int, str, str, str], int] = {}
    sentences = split_sentences(doc.text)
    for sentence in sentences:
        tagged = tag_sentence(sentence, db)
        for variant in split_conjunctions(tagged, db):
            for rel in extract_relations(variant):
                rel = ExtractedRelation(
                    phrases=rel.phrases,
                    confidence=rel.confidence,
                    sentence_index=sentence.index,
                    document_id=doc.id,
                )
                key = (sentence.index, rel.subject, rel.relation, rel.object)
                if key in best:
                    existing = relations[best[key]]
                    if rel.confidence > existing.confidence:
                        relations[best[key]] = rel
                else:
                    best[key] = len(relations)
                    relations.append(rel)
    return relations, len(sentences)


def filter_by_confidence(
    relations: Iterable[ExtractedRelation], sigma_relationship: float
) -> list[ExtractedRelation]:
    """Keep tuples at or above the confidence threshold, order preserved."""
    return [r for r in relations if r.confidence >= sigma_relationship]


def extraction_stats(
    relations: Iterable[ExtractedRelation], sentence_count: int, sigma_relationship: float
) -> ExtractionStats:
    surviving = {r.sentence_index for r in filter_by_confidence(relations, sigma_relationship)}
    failed = sentence_count - len(surviving)
    return ExtractionStats(sentence_count=sentence_count, failed_sentences=failed)


def extraction_alarm(stats: ExtractionStats) -> str | None:
    """Warning when extraction failed for more than half of the sentences."""
    if stats.failure_ratio > 0.5:
        return (
            f"extraction failed for {stats.failed_sentences} of "
            f"{stats.sentence_count} sentences (> 50%); results may be sparse"
        )
    return None
