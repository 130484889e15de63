"""Text preprocessing: sentences, word tokens, PoS tags and noun lemmas.

The tagger is a frequency-lexicon tagger (bundled word-to-most-frequent-tag
table) with suffix and context heuristics on top; it emits Penn Treebank
tags.  All functions are pure and safe for per-document parallel use; the
lexicon and word lists are read-only module state.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Counter as CounterT
from collections import Counter

from .corpus import Document
from .wordnet import WordNetDB

NOUN_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS"})
VERB_TAGS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"})
CLOSED_CLASS_TAGS = frozenset(
    {"DT", "IN", "CC", "TO", "PRP", "PRP$", "MD", "EX", "WDT", "WP", "WP$", "WRB", "POS"}
)

_NUMBER_RE = re.compile(r"^[+-]?\d[\d,]*(\.\d+)?%?$")
_PUNCT_TAGS = {
    ".": ".", "!": ".", "?": ".",
    ",": ",",
    ":": ":", ";": ":", "--": ":", "-": ":", "...": ":",
    "(": "(", "[": "(", "{": "(",
    ")": ")", "]": ")", "}": ")",
    '"': "''", "'": "''", "`": "``", "``": "``", "''": "''",
    "$": "$", "#": "#",
}


def _read_data_lines(name: str) -> list[str]:
    text = resources.files("sysmlforge").joinpath("data", name).read_text(encoding="utf-8")
    return [line for line in text.splitlines() if line and not line.startswith("#")]


@lru_cache(maxsize=None)
def data_version(name: str) -> str:
    """Version tag from the data file's header comment (e.g. ``v1``)."""
    text = resources.files("sysmlforge").joinpath("data", name).read_text(encoding="utf-8")
    first = text.splitlines()[0] if text else ""
    match = re.search(r"\bv(\d+)\b", first)
    return f"v{match.group(1)}" if match else "unversioned"


@lru_cache(maxsize=1)
def stop_words() -> frozenset[str]:
    return frozenset(_read_data_lines("stopwords.txt"))


@lru_cache(maxsize=1)
def abbreviations() -> frozenset[str]:
    return frozenset(_read_data_lines("abbreviations.txt"))


@lru_cache(maxsize=1)
def tag_lexicon() -> dict[str, str]:
    table: dict[str, str] = {}
    for line in _read_data_lines("tagger_lexicon.tsv"):
        word, _, tag = line.partition("\t")
        table[word] = tag
    return table


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos: str
    sentence_index: int
    token_index: int


@dataclass(frozen=True)
class SentenceView:
    index: int
    text: str
    tokens: tuple[Token, ...] = field(default_factory=tuple)


# -- sentence splitting ----------------------------------------------------

_BOUNDARY_RE = re.compile(r"[.!?]+[\"'”’)\]]*(?=\s|$)")


def split_sentences(text: str) -> list[SentenceView]:
    """Split text into sentences at terminal punctuation and blank lines.

    Periods after known abbreviations, single initials, or dotted tokens
    (``e.g.``) do not end a sentence; neither does a period followed by a
    lowercase continuation.
    """
    boundaries: list[int] = []
    for match in _BOUNDARY_RE.finditer(text):
        end = match.end()
        if not text[end:].strip():
            boundaries.append(end)
            continue
        punct = match.group()
        if punct.startswith("."):
            before = text[: match.start()]
            word = re.search(r"(\S*)$", before).group(1)
            bare = word.rstrip(".").lstrip("(\"'").lower()
            if bare in abbreviations():
                continue
            if len(bare) == 1 and word[-1:].isalpha() and word[-1:].isupper():
                continue
            if "." in word:
                continue
            following = text[end:].lstrip()
            if following and following[0].islower():
                continue
        boundaries.append(end)
    for match in re.finditer(r"\n\s*\n", text):
        boundaries.append(match.start())

    sentences: list[SentenceView] = []
    start = 0
    for cut in sorted(set(boundaries)):
        segment = text[start:cut].strip()
        if segment:
            sentences.append(SentenceView(index=len(sentences), text=segment))
        start = cut
    tail = text[start:].strip()
    if tail:
        sentences.append(SentenceView(index=len(sentences), text=tail))
    return sentences


# -- word tokenization -------------------------------------------------------

_CONTRACTION_RE = re.compile(r"(?i)([^\s'])('ll|'re|'ve|n't|'s|'m|'d)\b")


def tokenize_words(sentence: str) -> list[str]:
    """Penn-Treebank-style word tokenization of one sentence.

    Punctuation splits off words, contractions split (``don't`` becomes
    ``do``/``n't``), hyphenated words stay whole, and commas or periods
    inside numbers stay attached.
    """
    s = " " + sentence + " "
    s = re.sub(r"[“”]", '"', s)
    s = re.sub(r"’", "'", s)
    s = re.sub(r"([?!;@#$%&\"(){}\[\]<>])", r" \1 ", s)
    s = re.sub(r"\.\.\.", " ... ", s)
    s = re.sub(r"--+", " -- ", s)
    # commas and colons split unless both neighbours are digits
    s = re.sub(r",(?!\d)", " , ", s)
    s = re.sub(r"(?<!\d),", " , ", s)
    s = re.sub(r":(?!\d)", " : ", s)
    s = re.sub(r"(?<!\d):", " : ", s)
    s = _CONTRACTION_RE.sub(r"\1 \2", s)
    s = re.sub(r"(?i)\b(can)(not)\b", r"\1 \2", s)
    # sentence-final period (possibly before closing quotes or brackets)
    s = re.sub(r"(?<=[^\s.])(\.)([\"')\]]*)\s*$", r" \1 \2 ", s)
    s = re.sub(r"^\s*'(?=\w)", " ' ", s)
    return s.split()


# -- tagging -----------------------------------------------------------------

_NOUN_SUFFIX = ("ion", "ment", "ness", "ity", "ance", "ence", "ship", "ism", "hood")
_ADJ_SUFFIX = ("ous", "ful", "ive", "able", "ible", "ic", "ish", "ary", "ent", "ant")


def _plural_analysis(lower: str, lexicon: dict[str, str]) -> str | None:
    """Tag an unknown s-form from the tag of its base, when the base is known."""
    if not lower.endswith("s") or lower.endswith("ss") or len(lower) < 3:
        return None
    bases = [lower[:-1]]
    if lower.endswith("ies"):
        bases.append(lower[:-3] + "y")
    if lower.endswith("es"):
        bases.append(lower[:-2])
    for base in bases:
        tag = lexicon.get(base)
        if tag is None:
            continue
        if tag.startswith("VB"):
            return "VBZ"
        if tag in ("NN", "JJ"):
            return "NNS"
    return None


def _suffix_tag(lower: str, lexicon: dict[str, str]) -> str:
    if "-" in lower:
        return "JJ"
    if lower.endswith("ly"):
        return "RB"
    if lower.endswith("ing") and len(lower) > 4:
        return "VBG"
    if lower.endswith("ed") and len(lower) > 3:
        return "VBD"
    if lower.endswith(_NOUN_SUFFIX):
        return "NN"
    if lower.endswith(_ADJ_SUFFIX):
        return "JJ"
    if lower.endswith("est") and len(lower) > 4:
        return "JJS"
    plural = _plural_analysis(lower, lexicon)
    if plural is not None:
        return plural
    if lower.endswith("s") and not lower.endswith(("ss", "us", "is")) and len(lower) > 3:
        return "NNS"
    return "NN"


def pos_tag(tokens: list[str]) -> list[tuple[str, str]]:
    """Assign one Penn Treebank tag per token; unknown words fall back to
    suffix heuristics and finally to NN."""
    lexicon = tag_lexicon()
    tags: list[str] = []
    for i, token in enumerate(tokens):
        if token in _PUNCT_TAGS:
            tags.append(_PUNCT_TAGS[token])
            continue
        if token == "'s":
            tags.append("POS")
            continue
        if _NUMBER_RE.match(token):
            tags.append("CD")
            continue
        lower = token.lower()
        capitalized = token[:1].isupper()
        if capitalized and i > 0:
            tag = lexicon.get(lower)
            tags.append(tag if tag in CLOSED_CLASS_TAGS else "NNP")
            continue
        tag = lexicon.get(lower)
        if tag is not None:
            tags.append(tag)
            continue
        fallback = _suffix_tag(lower, lexicon)
        if capitalized:
            if fallback == "NN" and not lower.endswith(_NOUN_SUFFIX):
                fallback = "NNP"
            elif fallback == "NNS" and _plural_analysis(lower, lexicon) is None:
                fallback = "NNP"
        tags.append(fallback)

    # context repair passes
    for i in range(1, len(tags)):
        if tags[i] in ("VB", "VBP", "VBZ") and tags[i - 1] in ("DT", "PRP$", "JJ", "CD"):
            tags[i] = "NN"
    # unknown noun-tagged word wedged between a noun phrase and a fresh
    # determiner is a finite verb ("the display lists the windows")
    for i in range(1, len(tags) - 1):
        if (
            tags[i] in ("NN", "NNS")
            and tokens[i].islower()
            and tokens[i].lower() not in lexicon
            and tags[i - 1] in ("NN", "NNS", "NNP", "NNPS", "PRP")
            and tags[i + 1] in ("DT", "PRP$")
        ):
            tags[i] = "VBZ" if tokens[i].endswith("s") else "VBP"
    be_forms = {"be", "am", "is", "are", "was", "were", "been", "being"}
    for i in range(1, len(tags)):
        if tags[i] != "VBD":
            continue
        j = i - 1
        while j >= 0 and (tags[j] in ("RB", "MD") or tags[j].startswith("VB")):
            if tokens[j].lower() in be_forms:
                tags[i] = "VBN"
                break
            j -= 1
    for i in range(len(tags) - 2, -1, -1):
        if (
            tags[i + 1] in ("NNP", "NNPS")
            and tokens[i][:1].isupper()
            and tags[i] not in CLOSED_CLASS_TAGS
            and tags[i] not in (",", ".", ":", "(", ")")
        ):
            tags[i] = "NNP"
    for i in range(1, len(tags)):
        if tags[i] == "VB" and tags[i - 1] in ("NN", "NNS", "NNP", "NNPS", "PRP"):
            tags[i] = "VBP"
    return list(zip(tokens, tags))


def tag_sentence(sentence: SentenceView, db: WordNetDB | None = None) -> SentenceView:
    """Tokenize and tag a sentence, lemmatizing nouns and verbs when a
    database is supplied."""
    tagged = pos_tag(tokenize_words(sentence.text))
    tokens = []
    for i, (surface, tag) in enumerate(tagged):
        lemma = surface.lower()
        if db is not None:
            if tag in NOUN_TAGS:
                lemma = db.morphy(lemma, "n")
            elif tag in VERB_TAGS:
                lemma = db.morphy(lemma, "v")
        tokens.append(
            Token(surface=surface, lemma=lemma, pos=tag, sentence_index=sentence.index, token_index=i)
        )
    return SentenceView(index=sentence.index, text=sentence.text, tokens=tuple(tokens))


# -- noun extraction ---------------------------------------------------------

def noun_lemmas(text: str, db: WordNetDB) -> list[str]:
    """Noun lemmas of a text span in order: tag, keep nouns, lowercase,
    lemmatize, drop stop words."""
    out: list[str] = []
    stops = stop_words()
    for surface, tag in pos_tag(tokenize_words(text)):
        if tag not in NOUN_TAGS:
            continue
        lemma = db.morphy(surface.lower(), "n")
        if lemma in stops or not lemma:
            continue
        out.append(lemma)
    return out


def extract_nouns(doc: Document, db: WordNetDB) -> CounterT[str]:
    """Bag of noun lemmas of a document (multiplicity preserved)."""
    bag: CounterT[str] = Counter()
    for sentence in split_sentences(doc.text):
        bag.update(noun_lemmas(sentence.text, db))
    return bag
