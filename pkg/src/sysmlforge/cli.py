"""Command-line entry point: ingest, extract, generate, evaluate, serve.

Every option can be supplied through the environment with the
``SYSMLFORGE_`` prefix (for example ``SYSMLFORGE_GENERATE_SIGMA_P=0.8``).
The pipeline is deterministic: rerunning a command with the same inputs
and options writes byte-identical artifacts.
"""

from __future__ import annotations

from pathlib import Path

import click

from .corpus import Corpus, Hyperparameters, corpus_advisory, load_corpus
from .errors import SysmlForgeError
from .evaluation import EvalRow, GroundTruth, mapping_accuracy, phrase_pr, write_report
from .pipeline import DIAGRAM_TYPES, Pipeline, write_artifacts
from .wordnet import WordNetDB


def _gather_corpus(paths: tuple[str, ...], split_on: str | None) -> Corpus:
    if not paths:
        raise click.UsageError("--corpus is required (file, directory, or repeated)")
    inputs: list[Path] = []
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            inputs.extend(sorted(path.glob("*.txt")))
        else:
            inputs.append(path)
    return load_corpus(inputs, split_on=split_on)


def _hyperparameters(sigma_tfidf, sigma_relationship, sigma_p, sigma_rel_difference, l_phrase):
    try:
        return Hyperparameters(
            sigma_tfidf=sigma_tfidf,
            sigma_relationship=sigma_relationship,
            sigma_p=sigma_p,
            sigma_rel_difference=sigma_rel_difference,
            l_phrase=l_phrase,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc))


def corpus_options(fn):
    fn = click.option(
        "--corpus", "corpus_paths", multiple=True, type=click.Path(), help="Text file or directory (repeatable)."
    )(fn)
    fn = click.option("--split-on", default=None, help="Regex splitting each input into documents.")(fn)
    return fn


def hyperparameter_options(fn):
    defaults = Hyperparameters()
    fn = click.option("--sigma-tfidf", type=float, default=defaults.sigma_tfidf, show_default=True)(fn)
    fn = click.option(
        "--sigma-relationship", type=float, default=defaults.sigma_relationship, show_default=True
    )(fn)
    fn = click.option("--sigma-p", type=float, default=defaults.sigma_p, show_default=True)(fn)
    fn = click.option(
        "--sigma-rel-difference", type=float, default=defaults.sigma_rel_difference, show_default=True
    )(fn)
    fn = click.option("--l-phrase", type=int, default=defaults.l_phrase, show_default=True)(fn)
    return fn


def wordnet_option(fn):
    return click.option(
        "--wordnet-dir",
        default=None,
        envvar="SYSMLFORGE_WORDNET_DIR",
        type=click.Path(),
        help="WordNet 3.x database directory (defaults to the bundled mini database).",
    )(fn)


@click.group(context_settings={"auto_envvar_prefix": "SYSMLFORGE"})
@click.version_option()
def main() -> None:
    """Generate SysML diagrams from a corpus of plain-text documents."""


@main.command()
@corpus_options
@click.option("--out", default="out", type=click.Path(), show_default=True)
def ingest(corpus_paths, split_on, out) -> None:
    """Load the corpus, print advisories and write its manifest."""
    corpus = _load(corpus_paths, split_on)
    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest = out_dir / "corpus_manifest.json"
    manifest.write_text(corpus.manifest_json() + "\n", encoding="utf-8")
    for warning in corpus_advisory(corpus):
        click.echo(f"advisory: {warning}", err=True)
    click.echo(f"{corpus.n_documents} documents -> {manifest}")


@main.command()
@corpus_options
@wordnet_option
@click.option("--out", default="out", type=click.Path(), show_default=True)
@click.option("--jobs", type=int, default=None, help="Parallel workers (defaults to machine parallelism).")
def extract(corpus_paths, split_on, wordnet_dir, out, jobs) -> None:
    """Extract relation tuples for every document and cache them on disk."""
    corpus = _load(corpus_paths, split_on)
    pipeline = _pipeline(corpus, wordnet_dir, out)
    pipeline.preload_relations(jobs=jobs)
    total = 0
    for doc in corpus.documents:
        relations, sentences = pipeline.relations(doc.id)
        total += len(relations)
        click.echo(f"{doc.id}: {len(relations)} relations from {sentences} sentences")
    click.echo(f"cached {total} relations under {pipeline.cache_dir}")


@main.command()
@corpus_options
@wordnet_option
@hyperparameter_options
@click.option("--doc", "doc_id", default=None, help="Document id (defaults to the first document).")
@click.option(
    "--type",
    "diagram_type",
    type=click.Choice(["bdd", "ibd", "req", "all"]),
    default="all",
    show_default=True,
)
@click.option("--parent", default=None, help="Phrase naming the parent block to scope to.")
@click.option("--out", default="out", type=click.Path(), show_default=True)
@click.option("--jobs", type=int, default=None)
@click.option("--debug-weights", is_flag=True, help="Also export the per-term weighting table as CSV.")
def generate(
    corpus_paths,
    split_on,
    wordnet_dir,
    sigma_tfidf,
    sigma_relationship,
    sigma_p,
    sigma_rel_difference,
    l_phrase,
    doc_id,
    diagram_type,
    parent,
    out,
    jobs,
    debug_weights,
) -> None:
    """Run the whole pipeline for one document and write all artifacts."""
    corpus = _load(corpus_paths, split_on)
    hp = _hyperparameters(sigma_tfidf, sigma_relationship, sigma_p, sigma_rel_difference, l_phrase)
    pipeline = _pipeline(corpus, wordnet_dir, out)
    if doc_id is None:
        doc_id = corpus.documents[0].id
        click.echo(f"no --doc given; using {doc_id}", err=True)
    types = DIAGRAM_TYPES if diagram_type == "all" else (diagram_type,)
    try:
        result = pipeline.run_document(doc_id, hp, types, parent_phrase=parent)
    except SysmlForgeError as exc:
        raise click.ClickException(str(exc))
    for warning in result.warnings:
        click.echo(f"advisory: {warning}", err=True)
    table = pipeline.weights()[doc_id] if debug_weights else None
    for path in write_artifacts(result, out, debug_weights=table):
        click.echo(str(path))


@main.command()
@corpus_options
@wordnet_option
@hyperparameter_options
@click.option("--truth", "truth_dir", required=True, type=click.Path(exists=True), help="Directory of per-document ground-truth JSON files.")
@click.option("--out", default="out", type=click.Path(), show_default=True)
@click.option("--figure/--no-figure", default=True, show_default=True, help="Render the report chart.")
def evaluate(
    corpus_paths,
    split_on,
    wordnet_dir,
    sigma_tfidf,
    sigma_relationship,
    sigma_p,
    sigma_rel_difference,
    l_phrase,
    truth_dir,
    out,
    figure,
) -> None:
    """Score extracted phrases and mapped relations against ground truth."""
    corpus = _load(corpus_paths, split_on)
    hp = _hyperparameters(sigma_tfidf, sigma_relationship, sigma_p, sigma_rel_difference, l_phrase)
    pipeline = _pipeline(corpus, wordnet_dir, out)
    rows = []
    truth_files = sorted(Path(truth_dir).glob("*.json"))
    if not truth_files:
        raise click.ClickException(f"no ground-truth .json files in {truth_dir}")
    for path in truth_files:
        truth = GroundTruth.load(path)
        try:
            result = pipeline.run_document(truth.document_id, hp, ("bdd",))
        except SysmlForgeError as exc:
            raise click.ClickException(str(exc))
        pr = phrase_pr({p.lemmas for p in result.key_phrases}, truth)
        acc = mapping_accuracy(result.classified, truth)
        rows.append(
            EvalRow(
                document_id=truth.document_id,
                precision=pr.precision,
                recall=pr.recall,
                accuracy=acc.accuracy,
            )
        )
        flags = "" if pr.precision_defined else " (no phrases extracted)"
        click.echo(
            f"{truth.document_id}: precision={pr.precision:.3f} recall={pr.recall:.3f}"
            f" accuracy={acc.accuracy:.3f} on {acc.evaluated} labelled pairs"
            f" ({acc.skipped} unlabelled skipped){flags}"
        )
    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "report.csv"
    figure_path = out_dir / "report.png" if figure else None
    write_report(rows, csv_path, figure_path)
    click.echo(f"report -> {csv_path}" + (f" and {figure_path}" if figure_path else ""))


@main.command()
@click.option("--corpus", "corpus_dir", default=None, type=click.Path(), help="Corpus directory (defaults to the bundled demo corpus).")
@wordnet_option
@click.option("--cache-dir", default=None, type=click.Path())
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(corpus_dir, wordnet_dir, cache_dir, host, port) -> None:
    """Start the HTTP service backing the interactive UI."""
    import uvicorn

    from .service import create_app

    app = create_app(corpus_dir=corpus_dir, wordnet_dir=wordnet_dir, cache_dir=cache_dir)
    uvicorn.run(app, host=host, port=port)


def _load(corpus_paths, split_on) -> Corpus:
    try:
        return _gather_corpus(corpus_paths, split_on)
    except SysmlForgeError as exc:
        raise click.ClickException(str(exc))


def _pipeline(corpus: Corpus, wordnet_dir, out) -> Pipeline:
    try:
        db = WordNetDB(wordnet_dir)
    except SysmlForgeError as exc:
        raise click.ClickException(str(exc))
    return Pipeline(corpus, db, cache_dir=Path(out) / "cache")


if __name__ == "__main__":
    main()
