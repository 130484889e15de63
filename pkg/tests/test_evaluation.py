"""Evaluation metrics and report output."""

import csv
import json

from sysmlforge.evaluation import (
    ClassifiedRelation,
    EvalRow,
    GroundTruth,
    mapping_accuracy,
    phrase_pr,
    write_report,
)


def truth_with(phrases=(), relations=()):
    return GroundTruth.from_dict(
        {"document_id": "d1", "phrases": [list(p) for p in phrases], "relations": list(relations)}
    )


class TestPhrasePR:
    def test_two_of_three(self):
        truth = truth_with([("b",), ("c",), ("d",)])
        pr = phrase_pr({("a",), ("b",), ("c",)}, truth)
        assert abs(pr.precision - 2 / 3) < 1e-12
        assert abs(pr.recall - 2 / 3) < 1e-12

    def test_identity(self):
        truth = truth_with([("a",), ("b", "c")])
        pr = phrase_pr({("a",), ("b", "c")}, truth)
        assert (pr.precision, pr.recall) == (1.0, 1.0)

    def test_empty_extraction_flagged(self):
        pr = phrase_pr(set(), truth_with([("a",)]))
        assert pr.precision == 0.0
        assert not pr.precision_defined

    def test_exact_sequence_matching(self):
        truth = truth_with([("prediction", "model")])
        pr = phrase_pr({("model", "prediction")}, truth)
        assert pr.precision == 0.0 and pr.recall == 0.0

    def test_symmetry_under_swap(self):
        a = {("x",), ("y",), ("z",)}
        b = {("y",), ("z",), ("w",), ("v",)}
        forward = phrase_pr(a, truth_with(b))
        backward = phrase_pr(b, truth_with(a))
        assert abs(forward.precision - backward.recall) < 1e-12
        assert abs(forward.recall - backward.precision) < 1e-12

    def test_range(self):
        pr = phrase_pr({("a",)}, truth_with([("b",)]))
        assert 0.0 <= pr.precision <= 1.0 and 0.0 <= pr.recall <= 1.0


class TestMappingAccuracy:
    def classified(self):
        return [
            ClassifiedRelation("pump", "seal", "composite", "subject"),
            ClassifiedRelation("system", "sensor", "composite", "subject"),
            ClassifiedRelation("display", "map", "reference", "none"),
            ClassifiedRelation("model", "prediction", "generalization", "object"),
        ]

    def labels(self, flip_one=False):
        return [
            {"subject": "pump", "object": "seal", "kind": "composite", "direction": "subject"},
            {"subject": "system", "object": "sensor", "kind": "composite", "direction": "subject"},
            {"subject": "display", "object": "map", "kind": "reference", "direction": "none"},
            {
                "subject": "model",
                "object": "prediction",
                "kind": "generalization",
                "direction": "subject" if flip_one else "object",
            },
        ]

    def test_three_of_four(self):
        truth = truth_with(relations=self.labels(flip_one=True))
        acc = mapping_accuracy(self.classified(), truth)
        assert acc.accuracy == 0.75
        assert acc.evaluated == 4 and acc.skipped == 0

    def test_all_correct(self):
        truth = truth_with(relations=self.labels())
        assert mapping_accuracy(self.classified(), truth).accuracy == 1.0

    def test_unlabelled_pairs_skipped(self):
        truth = truth_with(relations=self.labels()[:2])
        acc = mapping_accuracy(self.classified(), truth)
        assert acc.evaluated == 2 and acc.skipped == 2
        assert acc.accuracy == 1.0

    def test_wrong_kind_counts_against(self):
        truth = truth_with(
            relations=[{"subject": "pump", "object": "seal", "kind": "reference", "direction": "none"}]
        )
        acc = mapping_accuracy([ClassifiedRelation("pump", "seal", "composite", "subject")], truth)
        assert acc.accuracy == 0.0

    def test_reference_ignores_direction(self):
        truth = truth_with(
            relations=[{"subject": "a", "object": "b", "kind": "reference", "direction": "subject"}]
        )
        acc = mapping_accuracy([ClassifiedRelation("a", "b", "reference", "none")], truth)
        assert acc.accuracy == 1.0


class TestGroundTruthIO:
    def test_load_from_file(self, tmp_path):
        payload = {
            "document_id": "d7",
            "phrases": [["pump"], ["water", "tank"]],
            "relations": [
                {"subject": "pump", "object": "water tank", "kind": "reference", "direction": "none"}
            ],
        }
        path = tmp_path / "d7.json"
        path.write_text(json.dumps(payload))
        truth = GroundTruth.load(path)
        assert truth.document_id == "d7"
        assert ("pump",) in truth.phrases and ("water", "tank") in truth.phrases
        assert truth.relation_labels[("pump", "water tank")] == ("reference", "none")


class TestWriteReport:
    def rows(self):
        return [
            EvalRow("d1", 0.808, 0.768, 0.758),
            EvalRow("d2", 0.915, 0.773, 0.709),
        ]

    def test_csv_contents(self, tmp_path):
        csv_path = tmp_path / "report.csv"
        write_report(self.rows(), csv_path)
        with csv_path.open() as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == ["document", "precision", "recall", "accuracy"]
        assert rows[1] == ["d1", "0.8080", "0.7680", "0.7580"]
        assert len(rows) == 3

    def test_figure_rendered(self, tmp_path):
        csv_path = tmp_path / "report.csv"
        png_path = tmp_path / "report.png"
        write_report(self.rows(), csv_path, png_path)
        assert png_path.exists() and png_path.stat().st_size > 0
