"""Preprocessing tests: sentence splitting, tokenization, tagging, nouns."""

from collections import Counter

from hypothesis import given, settings
from hypothesis import strategies as st

from sysmlforge.corpus import Document
from sysmlforge.preprocess import (
    abbreviations,
    extract_nouns,
    pos_tag,
    split_sentences,
    stop_words,
    tag_sentence,
    tokenize_words,
)


class TestSplitSentences:
    def test_two_terminal_periods(self):
        sents = split_sentences("It runs. It stops.")
        assert [s.text for s in sents] == ["It runs.", "It stops."]
        assert [s.index for s in sents] == [0, 1]

    def test_abbreviation_does_not_split(self):
        # oracle: "dr" is in the bundled abbreviation list
        assert "dr" in abbreviations()
        sents = split_sentences("Dr. Smith arrived.")
        assert [s.text for s in sents] == ["Dr. Smith arrived."]

    def test_empty_input(self):
        assert split_sentences("") == []
        assert split_sentences("   \n  ") == []

    def test_question_and_exclamation(self):
        sents = split_sentences("Does it work? Yes! It works.")
        assert len(sents) == 3

    def test_initials_do_not_split(self):
        assert len(split_sentences("J. Smith runs the pump.")) == 1

    def test_decimal_numbers_do_not_split(self):
        assert len(split_sentences("The pressure is 3.14 bar at most.")) == 1

    def test_blank_line_splits(self):
        sents = split_sentences("Pump overview\n\nThe pump runs.")
        assert [s.text for s in sents] == ["Pump overview", "The pump runs."]

    def test_coverage_of_non_whitespace(self):
        text = "The pump runs. Dr. Smith stops it! Done?"
        joined = "".join(s.text for s in split_sentences(text))
        assert "".join(joined.split()) == "".join(text.split())


class TestTokenizeWords:
    def test_simple_sentence(self):
        assert tokenize_words("The pump runs.") == ["The", "pump", "runs", "."]

    def test_contraction(self):
        assert tokenize_words("don't") == ["do", "n't"]

    def test_hyphenated_word_stays_whole(self):
        assert tokenize_words("state-of-the-art") == ["state-of-the-art"]

    def test_comma_split_but_not_in_numbers(self):
        assert tokenize_words("pumps, valves") == ["pumps", ",", "valves"]
        assert tokenize_words("has 100,000 employees.") == ["has", "100,000", "employees", "."]

    def test_possessive(self):
        assert tokenize_words("the pump's motor") == ["the", "pump", "'s", "motor"]

    def test_internal_period_kept(self):
        assert tokenize_words("Dr. Smith arrived.") == ["Dr.", "Smith", "arrived", "."]

    def test_parentheses(self):
        assert tokenize_words("the pump (a device).") == ["the", "pump", "(", "a", "device", ")", "."]


class TestPosTag:
    def test_closed_class(self):
        assert pos_tag(["the"]) == [("the", "DT")]

    def test_plural_in_context(self):
        tagged = dict(pos_tag(tokenize_words("the pumps run")))
        assert tagged["pumps"] == "NNS"

    def test_unknown_defaults_to_noun(self):
        assert pos_tag(["zxqv"]) == [("zxqv", "NN")]

    def test_every_token_tagged(self):
        tokens = tokenize_words("The controller sends 5 signals to the pump.")
        tagged = pos_tag(tokens)
        assert len(tagged) == len(tokens)
        assert all(tag for _, tag in tagged)

    def test_number_tagged_cd(self):
        assert pos_tag(["100,000"]) == [("100,000", "CD")]

    def test_capitalized_mid_sentence_is_proper_noun(self):
        tagged = dict(pos_tag(tokenize_words("the Rowing Club President James spoke")))
        assert tagged["James"] == "NNP"
        assert tagged["Club"] == "NNP"
        assert tagged["Rowing"] == "NNP"

    def test_determinism(self):
        tokens = tokenize_words("The pump heats the water quickly.")
        assert pos_tag(tokens) == pos_tag(tokens)

    def test_verb_after_subject(self):
        tagged = dict(pos_tag(tokenize_words("The pump runs.")))
        assert tagged["runs"] == "VBZ"


class TestExtractNouns:
    def test_plural_lemmatized(self, db):
        doc = Document.from_text("d", "d", "The sensors work.")
        assert extract_nouns(doc, db) == Counter({"sensor": 1})

    def test_stop_words_and_non_nouns_removed(self, db):
        doc = Document.from_text("d", "d", "The the of and")
        assert extract_nouns(doc, db) == Counter()

    def test_multiplicity_preserved(self, db):
        doc = Document.from_text("d", "d", "Pumps move water. Water cools pumps.")
        assert extract_nouns(doc, db) == Counter({"pump": 2, "water": 2})

    def test_output_lowercase_and_stopword_free(self, db):
        doc = Document.from_text(
            "d", "d", "The Pump sends Data to the Controller. It has 100,000 parts."
        )
        bag = extract_nouns(doc, db)
        stops = stop_words()
        for lemma in bag:
            assert lemma == lemma.lower()
            assert lemma not in stops

    def test_numbers_dropped(self, db):
        doc = Document.from_text("d", "d", "The system has 100,000 employees.")
        assert "100,000" not in extract_nouns(doc, db)

    def test_lemmatization_idempotent(self, db):
        doc = Document.from_text("d", "d", "The sensors and the sensor.")
        bag = extract_nouns(doc, db)
        rebag = Counter({db.morphy(l, "n"): c for l, c in bag.items()})
        assert bag == rebag

    def test_determinism(self, db):
        doc = Document.from_text("d", "d", "Pumps move water through pipes and valves.")
        assert extract_nouns(doc, db) == extract_nouns(doc, db)


class TestTagSentence:
    def test_tokens_contiguous_and_lemmatized(self, db):
        sent = split_sentences("The pumps heat the water.")[0]
        tagged = tag_sentence(sent, db)
        assert [t.token_index for t in tagged.tokens] == list(range(len(tagged.tokens)))
        by_surface = {t.surface: t for t in tagged.tokens}
        assert by_surface["pumps"].lemma == "pump"
        assert by_surface["heat"].lemma == "heat"
        assert all(t.lemma == t.lemma.lower() for t in tagged.tokens)


@settings(max_examples=50, deadline=None)
@given(st.text(alphabet=st.characters(codec="ascii"), max_size=200))
def test_split_sentences_never_crashes_and_covers_text(text):
    sents = split_sentences(text)
    joined = "".join(s.text for s in sents)
    assert "".join(joined.split()) == "".join(text.split())
