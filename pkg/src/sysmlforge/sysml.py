"""Mapping of key phrases/relations onto SysML model elements.

Block Definition Diagrams classify each key relation through an ordered
cascade (relation-phrase sense, string containment, score difference,
reference fallback) and then augment the top of the hierarchy: lexical
phrase abstraction, taxonomy queries between top-level unigrams, and
lowest-common-hypernym parents.  Internal Block Diagrams derive port
connections from relations between sub-blocks of a parent; Requirement
Diagrams group relation tuples into requirements with satisfy and trace
links.  Everything an augmentation step adds is marked ``augmented`` and
renders dotted downstream.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass, replace
from functools import lru_cache
from importlib import resources
from typing import Callable, Iterable, Mapping, Sequence

from .corpus import slugify
from .errors import UnknownParentError
from .preprocess import VERB_TAGS, pos_tag, tokenize_words
from .selection import KeyRelation, Phrase
from .weighting import DocumentWeights, weight_of
from .wordnet import SenseInfo, WordNetDB


@lru_cache(maxsize=1)
def composite_synsets() -> frozenset[str]:
    """Verb senses that classify a relation as a composite association;
    the bundled list is an editable configuration file."""
    text = resources.files("sysmlforge").joinpath("data", "composite_synsets.txt").read_text()
    return frozenset(
        line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")
    )

ORIGIN_EXTRACTED = "extracted"
ORIGIN_AUGMENTED = "augmented"

COMPOSITE = "composite"
GENERALIZATION = "generalization"
REFERENCE = "reference"
PORT_CONNECTION = "port_connection"
HIERARCHY_KINDS = (COMPOSITE, GENERALIZATION)


@dataclass(frozen=True)
class Block:
    id: str
    name: str
    operations: tuple[str, ...] = ()
    origin: str = ORIGIN_EXTRACTED


@dataclass(frozen=True)
class BlockRelation:
    kind: str
    whole_or_general: str
    part_or_special: str
    origin: str
    label: str | None = None
    source_index: int | None = None


@dataclass(frozen=True)
class Requirement:
    id: str
    name: str
    texts: tuple[str, ...]
    satisfied_by: str


@dataclass(frozen=True)
class ReqRelation:
    kind: str  # "trace" | "satisfy"
    from_id: str
    to_id: str
    origin: str


@dataclass(frozen=True)
class DiagramModel:
    diagram_type: str  # "BDD" | "IBD" | "REQ"
    blocks: tuple[Block, ...]
    relations: tuple[BlockRelation, ...]
    requirements: tuple[Requirement, ...]
    req_relations: tuple[ReqRelation, ...]
    parent: str | None
    metadata: dict

    @property
    def requirement_count(self) -> int:
        """Number of grouped requirement texts (one per source tuple)."""
        return sum(len(r.texts) for r in self.requirements)


class ModelDraft:
    """Mutable model under construction; snapshot with :meth:`finish`."""

    def __init__(self) -> None:
        self._blocks: dict[str, Block] = {}
        self._ids: set[str] = set()
        self.relations: list[BlockRelation] = []
        self._edges: dict[tuple, BlockRelation] = {}
        self._children: dict[str, set[str]] = {}
        self.requirements: list[Requirement] = []
        self.req_relations: list[ReqRelation] = []
        self.warnings: list[str] = []
        # classification of every source relation, surviving edge dedup
        self.source_classification: dict[int, BlockRelation] = {}

    # blocks ---------------------------------------------------------------

    @property
    def blocks(self) -> list[Block]:
        return list(self._blocks.values())

    def block_by_name(self, name: str) -> Block | None:
        return self._blocks.get(name)

    def block_by_id(self, block_id: str) -> Block | None:
        for block in self._blocks.values():
            if block.id == block_id:
                return block
        return None

    def add_block(self, name: str, origin: str = ORIGIN_EXTRACTED) -> Block:
        existing = self._blocks.get(name)
        if existing is not None:
            if existing.origin == ORIGIN_AUGMENTED and origin == ORIGIN_EXTRACTED:
                existing = replace(existing, origin=ORIGIN_EXTRACTED)
                self._blocks[name] = existing
            return existing
        base = f"b_{slugify(name)}"
        block_id = base
        n = 2
        while block_id in self._ids:
            block_id = f"{base}_{n}"
            n += 1
        self._ids.add(block_id)
        block = Block(id=block_id, name=name, operations=(), origin=origin)
        self._blocks[name] = block
        return block

    def copy_block(self, block: Block) -> None:
        if block.name not in self._blocks:
            self._blocks[block.name] = block
            self._ids.add(block.id)

    def add_operation(self, name: str, operation: str) -> None:
        block = self._blocks[name]
        if operation and operation not in block.operations:
            self._blocks[name] = replace(block, operations=block.operations + (operation,))

    # edges ------------------------------------------------------------------

    def _reaches(self, start: str, goal: str) -> bool:
        frontier = [start]
        seen = set()
        while frontier:
            node = frontier.pop()
            if node == goal:
                return True
            for child in self._children.get(node, ()):
                if child not in seen:
                    seen.add(child)
                    frontier.append(child)
        return False

    def add_edge(
        self,
        kind: str,
        upper: Block,
        lower: Block,
        origin: str,
        label: str | None = None,
        source_index: int | None = None,
    ) -> BlockRelation:
        """Add one relation; hierarchy edges that would close a directed
        cycle demote to references with a warning.  Duplicate edges return
        the existing one."""
        if kind in HIERARCHY_KINDS and (upper.id == lower.id or self._reaches(lower.id, upper.id)):
            self.warnings.append(
                f"{kind} {upper.name!r} -> {lower.name!r} would create a cycle; kept as reference"
            )
            kind = REFERENCE
        key = (kind, upper.id, lower.id, origin, label if kind == PORT_CONNECTION else None)
        existing = self._edges.get(key)
        if existing is not None:
            return existing
        edge = BlockRelation(
            kind=kind,
            whole_or_general=upper.id,
            part_or_special=lower.id,
            origin=origin,
            label=label,
            source_index=source_index,
        )
        self._edges[key] = edge
        self.relations.append(edge)
        if kind in HIERARCHY_KINDS:
            self._children.setdefault(upper.id, set()).add(lower.id)
        return edge

    # queries ------------------------------------------------------------------

    def lower_end_ids(self) -> set[str]:
        return {
            e.part_or_special for e in self.relations if e.kind in HIERARCHY_KINDS
        }

    def top_level_blocks(self) -> list[Block]:
        lower = self.lower_end_ids()
        return [b for b in sorted(self._blocks.values(), key=lambda b: (b.name, b.id)) if b.id not in lower]

    def children_of(self, block_id: str) -> list[str]:
        out = []
        for edge in self.relations:
            if edge.kind in HIERARCHY_KINDS and edge.whole_or_general == block_id:
                if edge.part_or_special not in out:
                    out.append(edge.part_or_special)
        return out

    def finish(self, diagram_type: str, parent: str | None, metadata: dict) -> DiagramModel:
        return DiagramModel(
            diagram_type=diagram_type,
            blocks=tuple(sorted(self._blocks.values(), key=lambda b: (b.name, b.id))),
            relations=tuple(self.relations),
            requirements=tuple(self.requirements),
            req_relations=tuple(self.req_relations),
            parent=parent,
            metadata=metadata,
        )


# -- relation-phrase head verbs ---------------------------------------------------


def relation_verb_sense(
    relation_phrase: str, context: Iterable[str], db: WordNetDB
) -> str | None:
    """Sense id of the last verb in a relation phrase, disambiguated
    against the document context; None when no verb or out of vocabulary."""
    tagged = pos_tag(tokenize_words(relation_phrase))
    verbs = [surface for surface, tag in tagged if tag in VERB_TAGS]
    if not verbs:
        return None
    lemma = db.morphy(verbs[-1].lower(), "v")
    sense = db.lesk(lemma, context, "v")
    return sense.id if sense is not None else None


# -- BDD ---------------------------------------------------------------------------


def map_bdd(
    key_rels: Sequence[KeyRelation],
    scores: Mapping[Phrase, float],
    composite_synsets: set[str],
    sigma_rel_difference: float,
    verb_sense: Callable[[str], str | None],
) -> ModelDraft:
    """Classify every key relation into exactly one of composite,
    generalization or reference, and collect relation phrases as
    operations of the subject block."""
    draft = ModelDraft()
    for index, kr in enumerate(key_rels):
        subject = draft.add_block(kr.subject_phrase.name)
        obj = draft.add_block(kr.object_phrase.name)
        p2 = kr.source.relation
        draft.add_operation(subject.name, p2)

        s_name, o_name = subject.name, obj.name
        sense = verb_sense(p2)
        if sense is not None and sense in composite_synsets:
            edge = draft.add_edge(COMPOSITE, subject, obj, ORIGIN_EXTRACTED, p2, index)
        elif s_name in o_name or o_name in s_name:
            shorter, longer = (subject, obj) if len(s_name) <= len(o_name) else (obj, subject)
            edge = draft.add_edge(GENERALIZATION, shorter, longer, ORIGIN_EXTRACTED, p2, index)
        elif abs(scores[kr.subject_phrase] - scores[kr.object_phrase]) > sigma_rel_difference:
            if scores[kr.subject_phrase] >= scores[kr.object_phrase]:
                upper, lower = subject, obj
            else:
                upper, lower = obj, subject
            edge = draft.add_edge(COMPOSITE, upper, lower, ORIGIN_EXTRACTED, p2, index)
        else:
            edge = draft.add_edge(REFERENCE, subject, obj, ORIGIN_EXTRACTED, p2, index)
        draft.source_classification[index] = edge
    return draft


def abstract_phrase_once(
    lemmas: tuple[str, ...],
    weights: DocumentWeights,
    senses: Mapping[str, SenseInfo],
) -> tuple[str, ...]:
    """Drop the noun with the smallest combined weight+sense score; ties
    drop the later noun."""
    def gamma(term: str) -> float:
        sense = senses.get(term)
        h = sense.wn_score if sense is not None else 0.0
        return weight_of(weights, term) + h

    scores = [gamma(t) for t in lemmas]
    drop = min(range(len(lemmas)), key=lambda i: (scores[i], -i))
    return lemmas[:drop] + lemmas[drop + 1 :]


def augment_bdd(
    draft: ModelDraft,
    weights: DocumentWeights,
    senses: Mapping[str, SenseInfo],
    db: WordNetDB,
) -> ModelDraft:
    """Four augmentation steps: top-level detection, lexical abstraction
    to unigrams, taxonomy edges between unigrams, and lowest-common-
    hypernym parents.  Additions carry augmented origin."""
    # step 2: phrase abstraction over the current top level
    worklist = [tuple(b.name.split()) for b in draft.top_level_blocks()]
    for lemmas in worklist:
        while len(lemmas) > 1:
            source = draft.add_block(" ".join(lemmas), ORIGIN_AUGMENTED)
            abstract = abstract_phrase_once(lemmas, weights, senses)
            target = draft.add_block(" ".join(abstract), ORIGIN_AUGMENTED)
            draft.add_edge(GENERALIZATION, target, source, ORIGIN_AUGMENTED)
            lemmas = abstract

    def sense_of(block: Block):
        if " " in block.name:
            return None
        info = senses.get(block.name)
        return info.synset if info is not None else None

    # step 3: taxonomy relations between top-level unigrams
    unigrams = [b for b in draft.top_level_blocks() if sense_of(b) is not None]
    for i in range(len(unigrams)):
        for j in range(i + 1, len(unigrams)):
            a, b = unigrams[i], unigrams[j]
            sa, sb = sense_of(a), sense_of(b)
            if db.relation_query(sa, sb, "hypernym"):
                draft.add_edge(GENERALIZATION, b, a, ORIGIN_AUGMENTED)
            elif db.relation_query(sa, sb, "hyponym"):
                draft.add_edge(GENERALIZATION, a, b, ORIGIN_AUGMENTED)
            elif db.relation_query(sa, sb, "meronym"):
                draft.add_edge(COMPOSITE, a, b, ORIGIN_AUGMENTED)
            elif db.relation_query(sa, sb, "holonym"):
                draft.add_edge(COMPOSITE, b, a, ORIGIN_AUGMENTED)

    # step 4: lowest-common-hypernym parents for what is still on top
    remaining = [b for b in draft.top_level_blocks() if sense_of(b) is not None]
    for i in range(len(remaining)):
        for j in range(i + 1, len(remaining)):
            a, b = remaining[i], remaining[j]
            sa, sb = sense_of(a), sense_of(b)
            common = db.lowest_common_hypernym(sa, sb)
            if common.id in (sa.id, sb.id):
                continue
            name = common.lemmas[0].replace("_", " ")
            parent = draft.add_block(name, ORIGIN_AUGMENTED)
            draft.add_edge(GENERALIZATION, parent, a, ORIGIN_AUGMENTED)
            draft.add_edge(GENERALIZATION, parent, b, ORIGIN_AUGMENTED)
    return draft


# -- IBD ---------------------------------------------------------------------------


def resolve_parent(draft: ModelDraft, parent_name: str) -> Block:
    block = draft.block_by_name(parent_name)
    if block is None:
        names = sorted(b.name for b in draft.blocks)
        candidates = difflib.get_close_matches(parent_name, names, n=5, cutoff=0.4)
        raise UnknownParentError(parent_name, candidates)
    return block


def map_ibd(
    bdd: ModelDraft,
    key_rels: Sequence[KeyRelation],
    parent: Block | None,
) -> ModelDraft:
    """Port connections between sub-blocks of the parent (two levels), fed
    by the augmented block-definition model."""
    draft = ModelDraft()
    draft.warnings.extend(bdd.warnings)
    if parent is not None:
        selected: set[str] = set()
        for child in bdd.children_of(parent.id):
            selected.add(child)
            selected.update(bdd.children_of(child))
    else:
        selected = {b.id for b in bdd.blocks}

    for block in sorted(bdd.blocks, key=lambda b: (b.name, b.id)):
        if block.id in selected:
            draft.copy_block(block)

    for index, kr in enumerate(key_rels):
        subject = bdd.block_by_name(kr.subject_phrase.name)
        obj = bdd.block_by_name(kr.object_phrase.name)
        if subject is None or obj is None:
            continue
        if subject.id not in selected and obj.id not in selected:
            continue
        edge = bdd.source_classification.get(index)
        if edge is not None and edge.kind in HIERARCHY_KINDS and edge.part_or_special in selected:
            # the matched phrase sits at the lower hierarchy end; the BDD
            # edge already covers this pair
            continue
        p2 = kr.source.relation.strip()
        if not p2:
            continue
        draft.copy_block(subject)
        draft.copy_block(obj)
        draft.add_edge(PORT_CONNECTION, subject, obj, ORIGIN_EXTRACTED, p2, index)
    return draft


def augment_ibd(draft: ModelDraft, parent: Block | None) -> ModelDraft:
    """Add intersection blocks for phrase pairs sharing nouns, with the
    intersection at the generalized end."""
    parent_lemmas = set(parent.name.split()) if parent is not None else None
    names = sorted(b.name for b in draft.blocks)
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            first = names[i].split()
            second = set(names[j].split())
            shared = [t for t in first if t in second]
            if not shared:
                continue
            if parent_lemmas is not None and set(shared) == parent_lemmas:
                continue
            block = draft.add_block(" ".join(shared), ORIGIN_AUGMENTED)
            for member_name in (names[i], names[j]):
                member = draft.block_by_name(member_name)
                if member is not None and member.id != block.id:
                    draft.add_edge(GENERALIZATION, block, member, ORIGIN_AUGMENTED)
    return draft


# -- REQ ---------------------------------------------------------------------------


def requirement_text(kr: KeyRelation) -> str:
    return "; ".join(kr.source.phrases)


def map_req(key_rels: Sequence[KeyRelation]) -> tuple[ModelDraft, list[list[KeyRelation]]]:
    """Group tuples into requirements named by subject phrase, satisfied by
    the subject block, with trace links over shared or crossed phrases.

    Also returns the source tuples grouped per requirement, in requirement
    order, for the augmentation pass.
    """
    draft = ModelDraft()
    grouped: dict[str, list[KeyRelation]] = {}
    order: list[str] = []
    for kr in key_rels:
        if not kr.source.relation.strip():
            continue
        name = kr.subject_phrase.name
        if name not in grouped:
            grouped[name] = []
            order.append(name)
        grouped[name].append(kr)

    req_ids: dict[str, str] = {}
    for name in order:
        block = draft.add_block(name)
        req_id = f"r_{slugify(name)}"
        req_ids[name] = req_id
        draft.requirements.append(
            Requirement(
                id=req_id,
                name=name,
                texts=tuple(requirement_text(kr) for kr in grouped[name]),
                satisfied_by=block.id,
            )
        )
        draft.req_relations.append(
            ReqRelation(kind="satisfy", from_id=block.id, to_id=req_id, origin=ORIGIN_EXTRACTED)
        )

    seen_traces: set[tuple[str, str]] = set()

    def add_trace(from_id: str, to_id: str, origin: str) -> None:
        if from_id == to_id:
            return
        key = (from_id, to_id)
        if key in seen_traces or (to_id, from_id) in seen_traces:
            return
        seen_traces.add(key)
        draft.req_relations.append(
            ReqRelation(kind="trace", from_id=from_id, to_id=to_id, origin=origin)
        )

    # shared object phrases
    by_object: dict[str, list[str]] = {}
    for name in order:
        for kr in grouped[name]:
            by_object.setdefault(kr.object_phrase.name, []).append(name)
    for object_name in sorted(by_object):
        holders = sorted(set(by_object[object_name]))
        for i in range(len(holders)):
            for j in range(i + 1, len(holders)):
                add_trace(req_ids[holders[i]], req_ids[holders[j]], ORIGIN_EXTRACTED)

    # a requirement's object phrase is another requirement's subject phrase
    for name in order:
        for kr in grouped[name]:
            target = kr.object_phrase.name
            if target in req_ids:
                add_trace(req_ids[name], req_ids[target], ORIGIN_EXTRACTED)

    return draft, [grouped[name] for name in order]


def augment_req(
    draft: ModelDraft,
    grouped: Sequence[Sequence[KeyRelation]],
    context: Iterable[str],
    db: WordNetDB,
) -> ModelDraft:
    """Trace links between requirements whose relation-phrase head verbs
    stand in a hypernym, hyponym, entailment or cause relation."""
    context_set = set(context)
    sense_cache: dict[str, str | None] = {}

    def head_sense(p2: str) -> str | None:
        if p2 not in sense_cache:
            sense_cache[p2] = relation_verb_sense(p2, context_set, db)
        return sense_cache[p2]

    pair_cache: dict[tuple[str, str], bool] = {}

    def related(sa: str, sb: str) -> bool:
        key = (sa, sb)
        if key not in pair_cache:
            a, b = db.synset(sa), db.synset(sb)
            pair_cache[key] = any(
                db.relation_query(a, b, kind)
                for kind in ("hypernym", "hyponym", "entailment", "cause")
            )
        return pair_cache[key]

    existing = {(r.from_id, r.to_id) for r in draft.req_relations if r.kind == "trace"}
    existing |= {(b, a) for a, b in existing}
    requirements = draft.requirements
    senses_per_req = [
        sorted({s for kr in group if (s := head_sense(kr.source.relation)) is not None})
        for group in grouped
    ]
    for i in range(len(requirements)):
        for j in range(len(requirements)):
            if i == j:
                continue
            from_id, to_id = requirements[i].id, requirements[j].id
            if (from_id, to_id) in existing:
                continue
            if any(related(sa, sb) for sa in senses_per_req[i] for sb in senses_per_req[j]):
                existing.add((from_id, to_id))
                existing.add((to_id, from_id))
                draft.req_relations.append(
                    ReqRelation(kind="trace", from_id=from_id, to_id=to_id, origin=ORIGIN_AUGMENTED)
                )
    return draft


# -- scoping -------------------------------------------------------------------------


def scope_to_parent(draft: ModelDraft, parent: Block, diagram_type: str) -> ModelDraft:
    """Restrict a model to the parent's sub-hierarchy (BDD) or to the
    requirements containing the parent phrase (REQ)."""
    if diagram_type == "BDD":
        keep = {parent.id}
        frontier = [parent.id]
        while frontier:
            for child in draft.children_of(frontier.pop()):
                if child not in keep:
                    keep.add(child)
                    frontier.append(child)
        scoped = ModelDraft()
        scoped.warnings.extend(draft.warnings)
        for block in draft.blocks:
            if block.id in keep:
                scoped.copy_block(block)
        for edge in draft.relations:
            if edge.whole_or_general in keep and edge.part_or_special in keep:
                scoped.relations.append(edge)
        return scoped
    if diagram_type == "REQ":
        parent_lemmas = tuple(parent.name.split())

        def contains(name: str) -> bool:
            lemmas = tuple(name.split())
            span = len(parent_lemmas)
            return any(lemmas[k : k + span] == parent_lemmas for k in range(len(lemmas) - span + 1))

        scoped = ModelDraft()
        scoped.warnings.extend(draft.warnings)
        kept_reqs = [r for r in draft.requirements if contains(r.name)]
        kept_ids = {r.id for r in kept_reqs}
        scoped.requirements.extend(kept_reqs)
        for req in kept_reqs:
            block = draft.block_by_id(req.satisfied_by)
            if block is not None:
                scoped.copy_block(block)
        for link in draft.req_relations:
            if link.kind == "satisfy" and link.to_id in kept_ids:
                scoped.req_relations.append(link)
            elif link.kind == "trace" and link.from_id in kept_ids and link.to_id in kept_ids:
                scoped.req_relations.append(link)
        return scoped
    raise ValueError(f"scope_to_parent does not apply to {diagram_type}")
