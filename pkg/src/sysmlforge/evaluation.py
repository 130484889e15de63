"""Evaluation harness: phrase precision/recall and mapping accuracy.

Ground truth lives in one JSON file per document:

    {
      "document_id": "d1",
      "phrases": [["prediction", "model"], ["pump"]],
      "relations": [
        {"subject": "pump", "object": "seal", "kind": "composite",
         "direction": "subject"}
      ]
    }

``direction`` names the endpoint at the upper hierarchy end (``subject``,
``object``, or ``none`` for references).  Reports are written as CSV with
an optional rendered chart next to it.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence


@dataclass(frozen=True)
class GroundTruth:
    document_id: str
    phrases: frozenset[tuple[str, ...]]
    relation_labels: dict[tuple[str, str], tuple[str, str]]

    @staticmethod
    def from_dict(data: dict) -> "GroundTruth":
        labels = {}
        for rel in data.get("relations", []):
            labels[(rel["subject"], rel["object"])] = (rel["kind"], rel.get("direction", "none"))
        return GroundTruth(
            document_id=data["document_id"],
            phrases=frozenset(tuple(p) for p in data.get("phrases", [])),
            relation_labels=labels,
        )

    @staticmethod
    def load(path: str | Path) -> "GroundTruth":
        return GroundTruth.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


@dataclass(frozen=True)
class PhrasePR:
    precision: float
    recall: float
    precision_defined: bool = True


def phrase_pr(extracted: Iterable[tuple[str, ...]], truth: GroundTruth) -> PhrasePR:
    """Exact lemma-sequence precision and recall against the ground truth.

    An empty extraction leaves precision undefined; it reports as zero with
    the flag cleared.
    """
    extracted_set = set(extracted)
    hits = extracted_set & truth.phrases
    if not extracted_set:
        return PhrasePR(precision=0.0, recall=0.0 if not truth.phrases else len(hits) / len(truth.phrases), precision_defined=False)
    precision = len(hits) / len(extracted_set)
    recall = len(hits) / len(truth.phrases) if truth.phrases else 0.0
    return PhrasePR(precision=precision, recall=recall)


@dataclass(frozen=True)
class ClassifiedRelation:
    """One mapped relation in evaluation form."""

    subject: str
    object: str
    kind: str
    direction: str  # "subject" | "object" | "none"


@dataclass(frozen=True)
class MappingAccuracy:
    accuracy: float
    evaluated: int
    skipped: int


def mapping_accuracy(mapped: Sequence[ClassifiedRelation], truth: GroundTruth) -> MappingAccuracy:
    """Fraction of labelled pairs with matching kind and hierarchy
    direction; pairs without a label are skipped and counted."""
    evaluated = 0
    correct = 0
    skipped = 0
    for rel in mapped:
        label = truth.relation_labels.get((rel.subject, rel.object))
        if label is None:
            skipped += 1
            continue
        evaluated += 1
        kind, direction = label
        if rel.kind == kind and (kind == "reference" or rel.direction == direction):
            correct += 1
    accuracy = correct / evaluated if evaluated else 0.0
    return MappingAccuracy(accuracy=accuracy, evaluated=evaluated, skipped=skipped)


@dataclass(frozen=True)
class EvalRow:
    document_id: str
    precision: float
    recall: float
    accuracy: float


def write_report(rows: Sequence[EvalRow], csv_path: str | Path, figure_path: str | Path | None = None) -> None:
    """CSV report (doc, precision, recall, accuracy) plus an optional bar
    chart rendered next to it."""
    csv_path = Path(csv_path)
    with csv_path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["document", "precision", "recall", "accuracy"])
        for row in rows:
            writer.writerow(
                [row.document_id, f"{row.precision:.4f}", f"{row.recall:.4f}", f"{row.accuracy:.4f}"]
            )
    if figure_path is not None:
        render_report_figure(rows, figure_path)


def render_report_figure(rows: Sequence[EvalRow], figure_path: str | Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    docs = [r.document_id for r in rows]
    x = range(len(rows))
    width = 0.27
    fig, ax = plt.subplots(figsize=(max(6, 1.2 * len(rows)), 4))
    ax.bar([i - width for i in x], [r.precision for r in rows], width, label="precision")
    ax.bar(list(x), [r.recall for r in rows], width, label="recall")
    ax.bar([i + width for i in x], [r.accuracy for r in rows], width, label="mapping accuracy")
    ax.set_xticks(list(x))
    ax.set_xticklabels(docs, rotation=30, ha="right")
    ax.set_ylim(0, 1.05)
    ax.set_ylabel("score")
    ax.legend(loc="lower right")
    ax.set_title("phrase extraction and relationship mapping")
    fig.tight_layout()
    fig.savefig(figure_path, dpi=120)
    plt.close(fig)
