"""End-to-end orchestration: corpus in, diagram models and artifacts out.

A :class:`Pipeline` owns one corpus plus the lexical database and caches
everything that does not depend on the hyperparameters: noun bags, term
weights, sense assignments, relation tuples and phrase preprocessing.
Requests with new thresholds then only redo selection, mapping and
rendering, which is what makes interactive re-generation fast.  Relation
tuples can additionally be cached on disk (JSON Lines, one file per
document, keyed by document content) so separate runs skip extraction.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from . import __version__
from .corpus import Corpus, Document, Hyperparameters, corpus_advisory, slugify
from .evaluation import ClassifiedRelation
from .preprocess import extract_nouns, noun_lemmas
from .relex import (
    ExtractedRelation,
    extract_document,
    extraction_alarm,
    extraction_stats,
    filter_by_confidence,
)
from .render import emit_model_json, emit_plantuml
from .selection import (
    KeyRelation,
    Phrase,
    ScoredPhrase,
    candidate_bag,
    candidate_phrase,
    score_candidates,
    select_key_phrases,
    select_key_relations,
)
from .sysml import (
    Block,
    DiagramModel,
    ModelDraft,
    augment_bdd,
    augment_ibd,
    augment_req,
    composite_synsets,
    map_bdd,
    map_ibd,
    map_req,
    relation_verb_sense,
    resolve_parent,
    scope_to_parent,
)
from .weighting import compute_tfidf, select_key_nouns
from .wordnet import WordNetDB, document_senses

DIAGRAM_TYPES = ("bdd", "ibd", "req")


@dataclass
class DocumentResult:
    """Everything one document run produces, prior to file output."""

    document_id: str
    hyperparameters: Hyperparameters
    key_nouns: set[str]
    relations: list[ExtractedRelation]
    filtered_relations: list[ExtractedRelation]
    scored_phrases: list[ScoredPhrase]
    key_phrases: set[Phrase]
    key_relations: list[KeyRelation]
    classified: list[ClassifiedRelation]
    models: dict[str, DiagramModel]
    warnings: list[str] = field(default_factory=list)


def _relation_cache_key(doc: Document) -> str:
    return hashlib.sha256(doc.text.encode("utf-8")).hexdigest()[:16]


_WORKER_DB: WordNetDB | None = None


def _init_worker(wordnet_dir: str) -> None:
    global _WORKER_DB
    _WORKER_DB = WordNetDB(wordnet_dir)


def _extract_worker(args: tuple[str, str, str]) -> tuple[str, list[dict], int]:
    doc_id, name, text = args
    relations, sentence_count = extract_document(Document.from_text(doc_id, name, text), _WORKER_DB)
    return doc_id, [r.as_dict() for r in relations], sentence_count


class Pipeline:
    def __init__(
        self,
        corpus: Corpus,
        db: WordNetDB,
        cache_dir: str | Path | None = None,
    ) -> None:
        self.corpus = corpus
        self.db = db
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self._noun_bags: dict[str, object] | None = None
        self._weights: Mapping[str, dict] | None = None
        self._senses: dict[str, dict] = {}
        self._relations: dict[str, tuple[list[ExtractedRelation], int]] = {}
        self._phrase_nouns: dict[tuple[str, str], tuple[str, ...]] = {}

    # -- cached corpus-level state ------------------------------------------

    def noun_bags(self):
        if self._noun_bags is None:
            self._noun_bags = {
                doc.id: extract_nouns(doc, self.db) for doc in self.corpus.documents
            }
        return self._noun_bags

    def weights(self):
        if self._weights is None:
            self._weights = compute_tfidf(self.noun_bags())
        return self._weights

    def relations(self, doc_id: str) -> tuple[list[ExtractedRelation], int]:
        if doc_id not in self._relations:
            doc = self.corpus.document(doc_id)
            cached = self._load_relation_cache(doc)
            if cached is not None:
                self._relations[doc_id] = cached
            else:
                relations, sentence_count = extract_document(doc, self.db)
                self._relations[doc_id] = (relations, sentence_count)
                self._store_relation_cache(doc, relations, sentence_count)
        return self._relations[doc_id]

    def preload_relations(self, jobs: int | None = None) -> None:
        """Extract relations for every document, optionally in parallel."""
        pending = []
        for doc in self.corpus.documents:
            if doc.id in self._relations:
                continue
            path = self._cache_path(doc)
            if path is not None and path.exists():
                continue
            pending.append(doc)
        jobs = jobs or os.cpu_count() or 1
        if len(pending) > 1 and jobs > 1:
            with ProcessPoolExecutor(
                max_workers=min(jobs, len(pending)),
                initializer=_init_worker,
                initargs=(str(self.db.dir),),
            ) as pool:
                tasks = [(d.id, d.name, d.text) for d in pending]
                for doc_id, rel_dicts, sentence_count in pool.map(_extract_worker, tasks):
                    relations = [ExtractedRelation.from_dict(r) for r in rel_dicts]
                    self._relations[doc_id] = (relations, sentence_count)
                    self._store_relation_cache(
                        self.corpus.document(doc_id), relations, sentence_count
                    )
        for doc in self.corpus.documents:
            self.relations(doc.id)

    def _cache_path(self, doc: Document) -> Path | None:
        if self.cache_dir is None:
            return None
        return self.cache_dir / f"{doc.id}-{_relation_cache_key(doc)}.jsonl"

    def _load_relation_cache(self, doc: Document):
        path = self._cache_path(doc)
        if path is None or not path.exists():
            return None
        lines = path.read_text(encoding="utf-8").splitlines()
        if not lines:
            return None
        meta = json.loads(lines[0])
        relations = [ExtractedRelation.from_dict(json.loads(line)) for line in lines[1:]]
        return relations, int(meta["sentence_count"])

    def _store_relation_cache(self, doc: Document, relations, sentence_count: int) -> None:
        path = self._cache_path(doc)
        if path is None:
            return
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = json.dumps({"sentence_count": sentence_count, "version": __version__}) + "\n"
        payload += "".join(json.dumps(r.as_dict(), sort_keys=True) + "\n" for r in relations)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(payload, encoding="utf-8")
        tmp.replace(path)

    def senses(self, doc_id: str):
        if doc_id not in self._senses:
            bag = self.noun_bags()[doc_id]
            extra: list[str] = []
            relations, _ = self.relations(doc_id)
            for rel in relations:
                for raw in (rel.subject, rel.object):
                    extra.extend(self.phrase_nouns(doc_id, raw))
            self._senses[doc_id] = document_senses(list(bag) + extra, self.db)
        return self._senses[doc_id]

    def phrase_nouns(self, doc_id: str, raw: str) -> tuple[str, ...]:
        key = (doc_id, raw)
        if key not in self._phrase_nouns:
            self._phrase_nouns[key] = tuple(noun_lemmas(raw, self.db))
        return self._phrase_nouns[key]

    # -- versions & metadata ---------------------------------------------------

    def versions(self) -> dict:
        from .preprocess import data_version

        return {
            "package": __version__,
            "wordnet": self.db.version,
            "stopwords": data_version("stopwords.txt"),
            "tagger_lexicon": data_version("tagger_lexicon.tsv"),
            "abbreviations": data_version("abbreviations.txt"),
        }

    def metadata(self, doc_id: str, hp: Hyperparameters) -> dict:
        return {
            "document": doc_id,
            "hyperparameters": hp.as_dict(),
            "versions": self.versions(),
        }

    # -- main entry point ---------------------------------------------------------

    def run_document(
        self,
        doc_id: str,
        hp: Hyperparameters,
        diagram_types: Iterable[str] = DIAGRAM_TYPES,
        parent_phrase: str | None = None,
    ) -> DocumentResult:
        doc = self.corpus.document(doc_id)
        weights = self.weights()[doc_id]
        senses = self.senses(doc_id)
        key_nouns = select_key_nouns(weights, hp.sigma_tfidf)

        relations, sentence_count = self.relations(doc_id)
        filtered = filter_by_confidence(relations, hp.sigma_relationship)
        stats = extraction_stats(relations, sentence_count, hp.sigma_relationship)

        resolve_cache: dict[str, Phrase | None] = {}

        def resolve(raw: str) -> Phrase | None:
            if raw not in resolve_cache:
                resolve_cache[raw] = candidate_phrase(
                    raw,
                    key_nouns,
                    hp.l_phrase,
                    weights,
                    self.db,
                    phrase_nouns=self.phrase_nouns(doc_id, raw),
                )
            return resolve_cache[raw]

        bag = candidate_bag(relations, resolve)
        scored = score_candidates(bag, weights, senses)
        key_phrases = select_key_phrases(scored, hp.sigma_p)
        key_rels = select_key_relations(filtered, key_phrases, resolve)
        scores = {sp.phrase: sp.score for sp in scored}
        context = set(self.noun_bags()[doc_id])

        warnings = list(corpus_advisory(self.corpus))
        alarm = extraction_alarm(stats)
        if alarm:
            warnings.append(f"{doc_id}: {alarm}")

        def verb_sense(p2: str) -> str | None:
            return relation_verb_sense(p2, context, self.db)

        bdd = map_bdd(key_rels, scores, composite_synsets(), hp.sigma_rel_difference, verb_sense)
        augment_bdd(bdd, weights, senses, self.db)
        classified = self._classify(key_rels, bdd)

        parent_block: Block | None = None
        parent_name: str | None = None
        if parent_phrase:
            normalized = " ".join(
                self.db.morphy(word.lower(), "n") for word in parent_phrase.split()
            )
            parent_block = resolve_parent(bdd, normalized)
            parent_name = parent_block.name

        requested = [t.lower() for t in diagram_types]
        models: dict[str, DiagramModel] = {}
        metadata = self.metadata(doc_id, hp)

        if "bdd" in requested:
            scoped = scope_to_parent(bdd, parent_block, "BDD") if parent_block else bdd
            models["bdd"] = scoped.finish("BDD", parent_name, metadata)
            warnings.extend(scoped.warnings)
        if "ibd" in requested:
            ibd = map_ibd(bdd, key_rels, parent_block)
            augment_ibd(ibd, parent_block)
            models["ibd"] = ibd.finish("IBD", parent_name, metadata)
        if "req" in requested:
            req, grouped = map_req(key_rels)
            augment_req(req, grouped, context, self.db)
            if parent_block:
                req_scoped = scope_to_parent(req, parent_block, "REQ")
                models["req"] = req_scoped.finish("REQ", parent_name, metadata)
            else:
                models["req"] = req.finish("REQ", parent_name, metadata)

        seen = set()
        unique_warnings = [w for w in warnings if not (w in seen or seen.add(w))]
        return DocumentResult(
            document_id=doc_id,
            hyperparameters=hp,
            key_nouns=key_nouns,
            relations=relations,
            filtered_relations=filtered,
            scored_phrases=scored,
            key_phrases=key_phrases,
            key_relations=key_rels,
            classified=classified,
            models=models,
            warnings=unique_warnings,
        )

    @staticmethod
    def _classify(key_rels, bdd: ModelDraft) -> list[ClassifiedRelation]:
        """Evaluation view of the mapped relations: kind plus which side
        ended up at the upper hierarchy end."""
        names = {b.id: b.name for b in bdd.blocks}
        out = []
        for index, kr in enumerate(key_rels):
            edge = bdd.source_classification.get(index)
            if edge is None:
                continue
            if edge.kind == "reference":
                direction = "none"
            elif names[edge.whole_or_general] == kr.subject_phrase.name:
                direction = "subject"
            else:
                direction = "object"
            out.append(
                ClassifiedRelation(
                    subject=kr.subject_phrase.name,
                    object=kr.object_phrase.name,
                    kind=edge.kind,
                    direction=direction,
                )
            )
        return out


# -- artifact writing -----------------------------------------------------------


def diagram_filename(doc_id: str, diagram_type: str, parent: str | None) -> str:
    suffix = f"_{slugify(parent)}" if parent else ""
    return f"{doc_id}_{diagram_type}{suffix}"


def write_artifacts(
    result: DocumentResult,
    out_dir: str | Path,
    debug_weights=None,
) -> list[Path]:
    """Write the intermediate artifacts and diagram files of one run."""
    from .render import canonical_json
    from .weighting import weights_csv

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def write(name: str, text: str) -> None:
        path = out / name
        path.write_text(text, encoding="utf-8")
        written.append(path)

    doc = result.document_id
    if debug_weights is not None:
        write(f"{doc}_noun_weights.csv", weights_csv(debug_weights))
    write(f"{doc}_key_nouns.json", canonical_json(sorted(result.key_nouns)))
    write(
        f"{doc}_relations.jsonl",
        "".join(json.dumps(r.as_dict(), sort_keys=True) + "\n" for r in result.filtered_relations),
    )
    write(
        f"{doc}_key_phrases.json",
        canonical_json(
            [
                {
                    "phrase": sp.phrase.name,
                    "lemmas": list(sp.phrase.lemmas),
                    "avg_w": sp.avg_w,
                    "avg_h": sp.avg_h,
                    "count_norm": sp.count_norm,
                    "lambda": sp.score,
                    "is_key": sp.phrase in result.key_phrases,
                }
                for sp in result.scored_phrases
            ]
        ),
    )
    write(
        f"{doc}_key_relations.json",
        canonical_json(
            [
                {
                    "subject": kr.subject_phrase.name,
                    "object": kr.object_phrase.name,
                    "relation": kr.source.relation,
                    "confidence": kr.source.confidence,
                    "sentence_index": kr.source.sentence_index,
                }
                for kr in result.key_relations
            ]
        ),
    )
    write(
        f"{doc}_mapped_relations.json",
        canonical_json(
            [
                {
                    "subject": c.subject,
                    "object": c.object,
                    "kind": c.kind,
                    "direction": c.direction,
                }
                for c in result.classified
            ]
        ),
    )
    for diagram_type, model in result.models.items():
        stem = diagram_filename(doc, diagram_type, model.parent)
        write(f"{stem}.puml", emit_plantuml(model).text)
        write(f"{stem}.json", emit_model_json(model))
    return written
