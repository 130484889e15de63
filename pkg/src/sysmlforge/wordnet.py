"""WordNet database access: WNDB file parsing and semantic queries.

Parses the plain-text database files (``index.<pos>``, ``data.<pos>``,
``<pos>.exc``) of a WordNet 3.x directory at startup.  The bundled
miniature database under ``sysmlforge/data/wordnet`` is used when no
directory is configured; any full WordNet 3.x installation works the same
way.  All queries are read-only and safe to share across threads.
"""

from __future__ import annotations

import hashlib
import re
import statistics
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable

from .errors import WordNetError

POS_FILES = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}

# detachment rules per part of speech: (suffix, replacement)
MORPH_RULES: dict[str, list[tuple[str, str]]] = {
    "n": [
        ("s", ""),
        ("ses", "s"),
        ("ves", "f"),
        ("xes", "x"),
        ("zes", "z"),
        ("ches", "ch"),
        ("shes", "sh"),
        ("men", "man"),
        ("ies", "y"),
    ],
    "v": [
        ("s", ""),
        ("ies", "y"),
        ("es", "e"),
        ("es", ""),
        ("ed", "e"),
        ("ed", ""),
        ("ing", "e"),
        ("ing", ""),
    ],
    "a": [("er", ""), ("est", ""), ("er", "e"), ("est", "e")],
    "r": [],
}

RELATION_SYMBOLS: dict[str, tuple[str, ...]] = {
    "hypernym": ("@", "@i"),
    "hyponym": ("~", "~i"),
    "meronym": ("%p", "%s", "%m"),
    "holonym": ("#p", "#s", "#m"),
    "entailment": ("*",),
    "cause": (">",),
}
TRANSITIVE_RELATIONS = frozenset({"hypernym", "hyponym", "meronym", "holonym"})

_WORD_RE = re.compile(r"[a-z0-9']+")


@dataclass(frozen=True)
class Synset:
    """One sense: an id, its member lemmas, a gloss and typed pointers."""

    id: str
    offset: int
    pos: str
    lemmas: tuple[str, ...]
    gloss: str
    pointers: tuple[tuple[str, str, int], ...]  # (symbol, target pos, target offset)

    def __repr__(self) -> str:  # pragma: no cover - debugging nicety
        return f"Synset({self.id!r})"


@dataclass(frozen=True)
class SenseInfo:
    """Per-document sense assignment of one noun.

    ``depth_norm`` is the raw depth divided by the largest raw depth among
    the document's nouns; the score is its one complement.
    """

    word: str
    synset: Synset | None
    depth_raw: int
    depth_norm: float
    wn_score: float


def bundled_wordnet_dir() -> Path:
    return Path(resources.files("sysmlforge").joinpath("data", "wordnet"))  # type: ignore[arg-type]


class WordNetDB:
    """Immutable in-memory view of a WNDB-format database directory."""

    def __init__(self, wordnet_dir: str | Path | None = None):
        self.dir = Path(wordnet_dir) if wordnet_dir else bundled_wordnet_dir()
        if not self.dir.is_dir():
            raise WordNetError(f"wordnet_dir {self.dir} is not a directory")
        self._by_offset: dict[tuple[str, int], Synset] = {}
        self._index: dict[tuple[str, str], tuple[int, ...]] = {}
        self._exceptions: dict[str, dict[str, tuple[str, ...]]] = {}
        self._by_id: dict[str, Synset] = {}
        self._depth_memo: dict[tuple[str, int], int] = {}
        self._load()

    # -- loading ---------------------------------------------------------

    def _load(self) -> None:
        digest = hashlib.sha256()
        loaded_any = False
        for pos, name in POS_FILES.items():
            data_path = self.dir / f"data.{name}"
            index_path = self.dir / f"index.{name}"
            if not (data_path.exists() and index_path.exists()):
                continue
            loaded_any = True
            digest.update(data_path.read_bytes())
            self._parse_data(pos, data_path)
            self._parse_index(pos, index_path)
            exc_path = self.dir / f"{name}.exc"
            self._exceptions[pos] = self._parse_exceptions(exc_path) if exc_path.exists() else {}
        if not loaded_any:
            raise WordNetError(f"no index/data files found under {self.dir}")
        self._assign_ids()
        self.version = f"wndb-{digest.hexdigest()[:12]}"

    def _parse_data(self, pos: str, path: Path) -> None:
        for line in path.read_text(encoding="utf-8", errors="replace").splitlines():
            if not line or line.startswith(" "):
                continue
            fields, _, gloss = line.partition("|")
            tokens = fields.split()
            offset = int(tokens[0])
            ss_type = tokens[2]
            w_cnt = int(tokens[3], 16)
            cursor = 4
            lemmas = tuple(tokens[cursor + 2 * i].lower() for i in range(w_cnt))
            cursor += 2 * w_cnt
            p_cnt = int(tokens[cursor])
            cursor += 1
            pointers = []
            for _ in range(p_cnt):
                sym, target_off, target_pos, _srctgt = tokens[cursor : cursor + 4]
                pointers.append((sym, target_pos, int(target_off)))
                cursor += 4
            synset = Synset(
                id="",  # assigned once the index is known
                offset=offset,
                pos=ss_type,
                lemmas=lemmas,
                gloss=gloss.strip(),
                pointers=tuple(pointers),
            )
            self._by_offset[(pos, offset)] = synset

    def _parse_index(self, pos: str, path: Path) -> None:
        for line in path.read_text(encoding="utf-8", errors="replace").splitlines():
            if not line or line.startswith(" "):
                continue
            tokens = line.split()
            lemma = tokens[0]
            synset_cnt = int(tokens[2])
            p_cnt = int(tokens[3])
            offsets = tuple(int(t) for t in tokens[6 + p_cnt : 6 + p_cnt + synset_cnt])
            self._index[(pos, lemma)] = offsets

    @staticmethod
    def _parse_exceptions(path: Path) -> dict[str, tuple[str, ...]]:
        table: dict[str, tuple[str, ...]] = {}
        for line in path.read_text(encoding="utf-8", errors="replace").splitlines():
            parts = line.split()
            if len(parts) >= 2:
                table[parts[0]] = tuple(parts[1:])
        return table

    def _assign_ids(self) -> None:
        # synset id = head lemma + pos + 1-based position in the head
        # lemma's index entry ("a" covers satellite "s" synsets)
        for (pos, offset), synset in sorted(self._by_offset.items()):
            head = synset.lemmas[0]
            index_pos = "a" if pos == "s" else pos
            senses = self._index.get((index_pos, head), ())
            sense_num = senses.index(offset) + 1 if offset in senses else 1
            named = Synset(
                id=f"{head}.{synset.pos}.{sense_num:02d}",
                offset=synset.offset,
                pos=synset.pos,
                lemmas=synset.lemmas,
                gloss=synset.gloss,
                pointers=synset.pointers,
            )
            self._by_offset[(pos, offset)] = named
            self._by_id.setdefault(named.id, named)

    # -- lookups ---------------------------------------------------------

    def synset(self, synset_id: str) -> Synset:
        try:
            return self._by_id[synset_id]
        except KeyError:
            raise WordNetError(f"no synset {synset_id!r} in database") from None

    def synsets(self, lemma: str, pos: str = "n") -> list[Synset]:
        """All synsets of a lemma in sense order (most frequent first)."""
        offsets = self._index.get((pos, lemma.lower().replace(" ", "_")), ())
        data_pos = pos
        return [self._by_offset[(data_pos, off)] for off in offsets]

    def all_lemmas(self, pos: str = "n") -> list[str]:
        return sorted(lemma for (p, lemma) in self._index if p == pos)

    def _targets(self, synset: Synset, symbols: tuple[str, ...]) -> list[Synset]:
        out = []
        for sym, target_pos, target_off in synset.pointers:
            if sym in symbols:
                key = ("a" if target_pos == "s" else target_pos, target_off)
                target = self._by_offset.get(key)
                if target is not None:
                    out.append(target)
        return out

    def hypernyms(self, synset: Synset) -> list[Synset]:
        return self._targets(synset, RELATION_SYMBOLS["hypernym"])

    def hyponyms(self, synset: Synset) -> list[Synset]:
        return self._targets(synset, RELATION_SYMBOLS["hyponym"])

    def meronyms(self, synset: Synset) -> list[Synset]:
        return self._targets(synset, RELATION_SYMBOLS["meronym"])

    def holonyms(self, synset: Synset) -> list[Synset]:
        return self._targets(synset, RELATION_SYMBOLS["holonym"])

    # -- morphy ----------------------------------------------------------

    def morphy(self, form: str, pos: str = "n") -> str:
        """Lemmatize via exception lists, detachment rules and dictionary
        search; returns the input unchanged when nothing matches."""
        form = form.lower()
        found = self._morphy(form, pos)
        return found[0] if found else form

    def _morphy(self, form: str, pos: str) -> list[str]:
        exceptions = self._exceptions.get(pos, {})
        index_pos = pos

        def known(candidates: Iterable[str]) -> list[str]:
            seen: list[str] = []
            for cand in candidates:
                if (index_pos, cand) in self._index and cand not in seen:
                    seen.append(cand)
            return seen

        def apply_rules(forms: Iterable[str]) -> list[str]:
            return [
                f[: -len(old)] + new
                for f in forms
                for old, new in MORPH_RULES.get(pos, [])
                if f.endswith(old)
            ]

        if form in exceptions:
            return known([form, *exceptions[form]])
        forms = apply_rules([form])
        results = known([form, *forms])
        if results:
            return results
        while forms:
            forms = apply_rules(forms)
            results = known(forms)
            if results:
                return results
        return []

    # -- depth and taxonomy ----------------------------------------------

    def depth(self, synset: Synset) -> int:
        """Length of the longest hypernym path from the synset to a root."""
        key = ("a" if synset.pos == "s" else synset.pos, synset.offset)
        memo = self._depth_memo
        if key in memo:
            return memo[key]
        # iterative longest-path to survive deep real-WordNet chains
        stack = [key]
        while stack:
            current = stack[-1]
            parents = self._targets(self._by_offset[current], RELATION_SYMBOLS["hypernym"])
            parent_keys = [("a" if p.pos == "s" else p.pos, p.offset) for p in parents]
            pending = [k for k in parent_keys if k not in memo and k != current]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            resolved = [memo[k] for k in parent_keys if k in memo]
            memo[current] = 1 + max(resolved) if resolved else 0
        return memo[key]

    def _closure(self, synset: Synset, symbols: tuple[str, ...]) -> set[tuple[str, int]]:
        """Every synset reachable through >= 1 pointer of the given kinds."""
        seen: set[tuple[str, int]] = set()
        frontier = [synset]
        while frontier:
            current = frontier.pop()
            for target in self._targets(current, symbols):
                key = (target.pos, target.offset)
                if key not in seen:
                    seen.add(key)
                    frontier.append(target)
        return seen

    def relation_query(self, a: Synset, b: Synset, kind: str) -> bool:
        """True iff ``b`` is reachable from ``a`` via the named pointer type.

        Hypernym/hyponym/meronym/holonym follow the transitive closure;
        entailment and cause follow direct pointers only.
        """
        symbols = RELATION_SYMBOLS[kind]
        if kind in TRANSITIVE_RELATIONS:
            return (b.pos, b.offset) in self._closure(a, symbols)
        return any(
            sym in symbols and target_off == b.offset and target_pos == b.pos
            for sym, target_pos, target_off in a.pointers
        )

    def hypernym_closure(self, synset: Synset, include_self: bool = True) -> list[Synset]:
        keys = self._closure(synset, RELATION_SYMBOLS["hypernym"])
        ancestors = [self._by_offset[k] for k in keys]
        if include_self:
            ancestors.append(synset)
        return ancestors

    def lowest_common_hypernym(self, a: Synset, b: Synset) -> Synset:
        """Deepest common ancestor (a synset counts as its own ancestor);
        ties break on the lexicographically smallest id."""
        ancestors_a = {(s.pos, s.offset) for s in self.hypernym_closure(a)}
        common = [s for s in self.hypernym_closure(b) if (s.pos, s.offset) in ancestors_a]
        if not common:
            roots = sorted(
                (s for s in self.hypernym_closure(a) if not self.hypernyms(s)),
                key=lambda s: s.id,
            )
            return roots[0] if roots else a
        best_depth = max(self.depth(s) for s in common)
        return min((s for s in common if self.depth(s) == best_depth), key=lambda s: s.id)

    # -- sense selection ---------------------------------------------------

    @staticmethod
    def _signature(synset: Synset) -> set[str]:
        tokens = set(_WORD_RE.findall(synset.gloss.lower()))
        for lemma in synset.lemmas:
            tokens.update(lemma.split("_"))
        return tokens

    def lesk(self, word: str, context: Iterable[str], pos: str = "n") -> Synset | None:
        """Pick the sense whose gloss and lemmas overlap the context most;
        ties go to the lowest sense number.  None when out of vocabulary."""
        lemma = self.morphy(word, pos)
        candidates = self.synsets(lemma, pos)
        if not candidates:
            return None
        context_set = set(context)
        best = candidates[0]
        best_overlap = len(self._signature(best) & context_set)
        for candidate in candidates[1:]:
            overlap = len(self._signature(candidate) & context_set)
            if overlap > best_overlap:
                best, best_overlap = candidate, overlap
        return best


def document_senses(
    nouns: Iterable[str],
    db: WordNetDB,
) -> dict[str, SenseInfo]:
    """Assign one sense per distinct noun of a document and normalize depths.

    The whole noun bag is the disambiguation context.  Out-of-vocabulary
    nouns get a sentinel depth equal to the (low) median depth of the
    in-vocabulary nouns, so unknown domain jargon neither dominates nor
    vanishes from phrase scores.
    """
    words = sorted(set(nouns))
    context = set(words)
    chosen: dict[str, Synset | None] = {w: db.lesk(w, context, "n") for w in words}
    known_depths = {w: db.depth(s) for w, s in chosen.items() if s is not None}
    sentinel = statistics.median_low(sorted(known_depths.values())) if known_depths else 0
    raw = {w: known_depths.get(w, sentinel) for w in words}
    max_raw = max(raw.values(), default=0)
    out: dict[str, SenseInfo] = {}
    for w in words:
        if max_raw > 0:
            norm = raw[w] / max_raw
        else:
            norm = 0.0
        out[w] = SenseInfo(
            word=w,
            synset=chosen[w],
            depth_raw=raw[w],
            depth_norm=norm,
            wn_score=1.0 - norm,
        )
    return out
