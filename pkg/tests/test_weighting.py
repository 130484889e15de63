"""tf-idf tests against direct hand evaluation of the weighting formulas."""

import math
from collections import Counter

from hypothesis import given, settings
from hypothesis import strategies as st

from sysmlforge.weighting import compute_tfidf, select_key_nouns, weight_of


def reference_tfidf(noun_bags):
    """Independent brute-force evaluation: the formulas written out again."""
    n = len(noun_bags)
    df = {}
    for bag in noun_bags.values():
        for term in set(bag):
            df[term] = df.get(term, 0) + 1
    expected = {}
    for doc_id, bag in noun_bags.items():
        raws = {t: math.log10(c + 1) * (math.log10(n / (1 + df[t])) + 1) for t, c in bag.items()}
        top = max(raws.values(), default=0.0)
        expected[doc_id] = {t: (raw / top if top else 0.0) for t, raw in raws.items()}
    return expected


class TestComputeTfidf:
    def test_single_doc_single_term(self):
        weights = compute_tfidf({"d1": Counter({"pump": 9})})
        entry = weights["d1"]["pump"]
        assert entry.tf == 1.0  # log10(10)
        assert entry.idf == math.log10(1 / 2) + 1
        assert entry.w == 1.0

    def test_term_in_one_of_three_docs(self):
        bags = {"d1": Counter({"pump": 9}), "d2": Counter({"water": 1}), "d3": Counter({"water": 1})}
        entry = compute_tfidf(bags)["d1"]["pump"]
        assert entry.tf == 1.0
        assert abs(entry.idf - 1.1760912590556813) < 1e-12
        assert abs(entry.w_raw - 1.1760912590556813) < 1e-12

    def test_term_in_all_three_docs(self):
        bags = {
            "d1": Counter({"pump": 99}),
            "d2": Counter({"pump": 1}),
            "d3": Counter({"pump": 1}),
        }
        entry = compute_tfidf(bags)["d1"]["pump"]
        assert entry.tf == 2.0
        assert abs(entry.idf - 0.8750612633917001) < 1e-12
        assert abs(entry.w_raw - 1.7501225267834002) < 1e-12

    def test_absent_term_weight_zero(self):
        weights = compute_tfidf({"d1": Counter({"pump": 2}), "d2": Counter({"water": 3})})
        assert weight_of(weights["d1"], "water") == 0.0

    def test_matches_brute_force_oracle(self):
        bags = {
            "d1": Counter({"pump": 3, "water": 1, "valve": 7}),
            "d2": Counter({"water": 2, "sensor": 5}),
            "d3": Counter({"pump": 1, "sensor": 1, "controller": 4}),
        }
        expected = reference_tfidf(bags)
        weights = compute_tfidf(bags)
        for doc_id, terms in expected.items():
            for term, w in terms.items():
                assert abs(weights[doc_id][term].w - w) < 1e-9

    def test_argmax_nouns_have_weight_one(self):
        bags = {"d1": Counter({"pump": 5, "water": 5, "valve": 1}), "d2": Counter({"rotor": 1})}
        weights = compute_tfidf(bags)["d1"]
        top = {t for t, e in weights.items() if e.w == 1.0}
        best_raw = max(e.w_raw for e in weights.values())
        assert top == {t for t, e in weights.items() if e.w_raw == best_raw}
        assert top

    def test_empty_document_bag(self):
        weights = compute_tfidf({"d1": Counter(), "d2": Counter({"pump": 1})})
        assert weights["d1"] == {}


class TestSelectKeyNouns:
    def test_sigma_zero_selects_all(self):
        weights = compute_tfidf({"d1": Counter({"pump": 2, "water": 1}), "d2": Counter({"water": 1})})
        assert select_key_nouns(weights["d1"], 0.0) == {"pump", "water"}

    def test_sigma_one_selects_none_under_strict_inequality(self):
        weights = compute_tfidf({"d1": Counter({"pump": 2, "water": 1}), "d2": Counter({"water": 1})})
        assert select_key_nouns(weights["d1"], 1.0) == set()

    def test_midrange_threshold(self):
        weights = compute_tfidf(
            {"d1": Counter({"pump": 30, "water": 1}), "d2": Counter({"water": 1, "rotor": 1})}
        )
        d1 = weights["d1"]
        assert d1["pump"].w == 1.0
        assert d1["water"].w < 0.5
        assert select_key_nouns(d1, 0.5) == {"pump"}


@settings(max_examples=100, deadline=None)
@given(
    st.dictionaries(
        st.sampled_from(["a", "b", "c", "d", "e"]),
        st.integers(min_value=1, max_value=50),
        min_size=1,
    ),
    st.floats(min_value=0, max_value=1),
    st.floats(min_value=0, max_value=1),
)
def test_threshold_monotonicity(bag, s1, s2):
    lo, hi = sorted([s1, s2])
    weights = compute_tfidf({"d1": Counter(bag), "d2": Counter({"a": 1})})["d1"]
    assert select_key_nouns(weights, hi) <= select_key_nouns(weights, lo)
