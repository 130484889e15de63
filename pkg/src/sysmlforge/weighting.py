"""tf-idf weighting of noun lemmas and key-noun selection.

For a term t in document d of an N-document corpus:

    tf  = log10(count + 1)
    idf = log10(N / (1 + df)) + 1
    w   = tf * idf, normalized by the largest raw weight in the document

Document frequency is a corpus-wide reduction; everything after it is
per-document and independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from collections import Counter


@dataclass(frozen=True)
class NounWeight:
    term: str
    count: int
    tf: float
    df: int
    idf: float
    w_raw: float
    w: float


DocumentWeights = dict[str, NounWeight]


def compute_tfidf(noun_bags: Mapping[str, Counter]) -> dict[str, DocumentWeights]:
    """Per-document term weights over the corpus noun bags.

    Keys of ``noun_bags`` are document ids.  Every term present in a
    document gets an entry; absent terms have weight zero by definition
    (``tf = log10(1) = 0``).
    """
    n_docs = len(noun_bags)
    df: Counter = Counter()
    for bag in noun_bags.values():
        df.update(set(bag))

    out: dict[str, DocumentWeights] = {}
    for doc_id, bag in noun_bags.items():
        raw: dict[str, tuple[int, float, float, float]] = {}
        for term, count in bag.items():
            tf = math.log10(count + 1)
            idf = math.log10(n_docs / (1 + df[term])) + 1
            raw[term] = (count, tf, idf, tf * idf)
        max_raw = max((v[3] for v in raw.values()), default=0.0)
        weights: DocumentWeights = {}
        for term, (count, tf, idf, w_raw) in raw.items():
            w = w_raw / max_raw if max_raw > 0 else 0.0
            weights[term] = NounWeight(
                term=term, count=count, tf=tf, df=df[term], idf=idf, w_raw=w_raw, w=w
            )
        out[doc_id] = weights
    return out


def weight_of(weights: DocumentWeights, term: str) -> float:
    """Normalized weight of a term; zero when absent from the document."""
    entry = weights.get(term)
    return entry.w if entry is not None else 0.0


def select_key_nouns(weights: DocumentWeights, sigma_tfidf: float) -> set[str]:
    """Nouns with weight strictly above the threshold.

    At the zero default every noun of the document counts as a key noun,
    so later stages see the full noun inventory.
    """
    if sigma_tfidf == 0:
        return set(weights)
    return {term for term, entry in weights.items() if entry.w > sigma_tfidf}


def weights_csv(weights: DocumentWeights) -> str:
    """Debug export: one row per term with every weighting component."""
    lines = ["term,count,tf,df,idf,w"]
    for term in sorted(weights):
        e = weights[term]
        lines.append(f"{term},{e.count},{e.tf:.9f},{e.df},{e.idf:.9f},{e.w:.9f}")
    return "\n".join(lines) + "\n"
