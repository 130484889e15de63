"""End-to-end pipeline behaviour on the bundled demo corpus."""

import json

import pytest

from sysmlforge.corpus import Hyperparameters, demo_corpus_dir, load_corpus_dir
from sysmlforge.errors import UnknownDocumentError, UnknownParentError
from sysmlforge.pipeline import Pipeline, diagram_filename, write_artifacts
from sysmlforge.render import emit_model_json, parse_model_json


@pytest.fixture(scope="module")
def demo_corpus():
    return load_corpus_dir(demo_corpus_dir())


@pytest.fixture(scope="module")
def pipeline(demo_corpus, db):
    return Pipeline(demo_corpus, db)


class TestRunDocument:
    def test_models_for_all_types(self, pipeline):
        result = pipeline.run_document("hydraulics", Hyperparameters())
        assert set(result.models) == {"bdd", "ibd", "req"}
        assert all(m.metadata["document"] == "hydraulics" for m in result.models.values())

    def test_metadata_records_versions(self, pipeline):
        result = pipeline.run_document("hydraulics", Hyperparameters(), ("bdd",))
        versions = result.models["bdd"].metadata["versions"]
        assert versions["package"]
        assert versions["wordnet"].startswith("wndb-")
        assert versions["stopwords"] == "v1"
        assert versions["tagger_lexicon"] == "v1"

    def test_requirement_count_invariant(self, pipeline):
        for doc in pipeline.corpus.documents:
            result = pipeline.run_document(doc.id, Hyperparameters(), ("req",))
            nonempty = sum(1 for kr in result.key_relations if kr.source.relation.strip())
            assert result.models["req"].requirement_count == nonempty

    def test_parent_scoping_bdd(self, pipeline):
        full = pipeline.run_document("sensing", Hyperparameters(), ("bdd",))
        scoped = pipeline.run_document("sensing", Hyperparameters(), ("bdd",), parent_phrase="system")
        model = scoped.models["bdd"]
        names = {b.name for b in model.blocks}
        assert "system" in names
        assert model.parent == "system"
        assert len(model.blocks) < len(full.models["bdd"].blocks)
        connected = {e.whole_or_general for e in model.relations}
        connected |= {e.part_or_special for e in model.relations}
        assert all(b.id in connected for b in model.blocks) or len(model.blocks) == 1

    def test_parent_phrase_lemmatized(self, pipeline):
        result = pipeline.run_document(
            "devices", Hyperparameters(), ("req",), parent_phrase="displays"
        )
        assert result.models["req"].parent == "display"

    def test_unknown_parent_raises(self, pipeline):
        with pytest.raises(UnknownParentError) as err:
            pipeline.run_document("devices", Hyperparameters(), ("bdd",), parent_phrase="zzgarbage")
        assert isinstance(err.value.candidates, list)

    def test_unknown_document_raises(self, pipeline):
        with pytest.raises(UnknownDocumentError):
            pipeline.run_document("nope", Hyperparameters())

    def test_extraction_alarm_included_for_sparse_documents(self, db):
        from sysmlforge.corpus import load_corpus

        corpus = load_corpus(
            [
                ("broken", "The best game ever. Amazing graphics everywhere. Pure fun."),
                ("fine", "The pump heats the water."),
            ]
        )
        pipeline = Pipeline(corpus, db)
        result = pipeline.run_document("broken", Hyperparameters())
        assert any("extraction failed" in w for w in result.warnings)

    def test_all_nouns_key_at_default_threshold(self, pipeline):
        result = pipeline.run_document("hydraulics", Hyperparameters())
        bag = pipeline.noun_bags()["hydraulics"]
        assert result.key_nouns == set(bag)

    def test_deterministic_across_fresh_pipelines(self, demo_corpus, db):
        outputs = []
        for _ in range(2):
            fresh = Pipeline(demo_corpus, db)
            result = fresh.run_document("hydraulics", Hyperparameters(), ("bdd", "req"))
            outputs.append(
                {t: emit_model_json(m) for t, m in result.models.items()}
            )
        assert outputs[0] == outputs[1]

    def test_augmented_elements_marked(self, pipeline):
        result = pipeline.run_document("hydraulics", Hyperparameters(), ("bdd",))
        model = result.models["bdd"]
        extracted_ids = set()
        for edge in model.relations:
            if edge.origin == "extracted":
                extracted_ids.add(edge.whole_or_general)
                extracted_ids.add(edge.part_or_special)
        for block in model.blocks:
            if block.origin == "extracted":
                assert block.id in extracted_ids

    def test_model_json_round_trip(self, pipeline):
        result = pipeline.run_document("power", Hyperparameters())
        for model in result.models.values():
            assert parse_model_json(emit_model_json(model)) == model


class TestRelationCache:
    def test_cache_file_written_and_reused(self, demo_corpus, db, tmp_path, monkeypatch):
        first = Pipeline(demo_corpus, db, cache_dir=tmp_path)
        relations, count = first.relations("power")
        files = list(tmp_path.glob("power-*.jsonl"))
        assert len(files) == 1

        # a fresh pipeline must load from disk without re-extracting
        import sysmlforge.pipeline as pipeline_module

        def boom(*args, **kwargs):
            raise AssertionError("extraction ran despite a warm cache")

        monkeypatch.setattr(pipeline_module, "extract_document", boom)
        second = Pipeline(demo_corpus, db, cache_dir=tmp_path)
        cached_relations, cached_count = second.relations("power")
        assert cached_relations == relations
        assert cached_count == count

    def test_cache_invalidates_on_content_change(self, db, tmp_path):
        from sysmlforge.corpus import load_corpus

        corpus_v1 = load_corpus([("doc", "The pump heats the water.")])
        Pipeline(corpus_v1, db, cache_dir=tmp_path).relations("doc")
        corpus_v2 = load_corpus([("doc", "The valve opens the pipe.")])
        relations, _ = Pipeline(corpus_v2, db, cache_dir=tmp_path).relations("doc")
        assert any("valve" in r.subject.lower() for r in relations)
        assert len(list(tmp_path.glob("doc-*.jsonl"))) == 2

    def test_preload_serial_matches_parallel(self, demo_corpus, db, tmp_path):
        serial = Pipeline(demo_corpus, db, cache_dir=tmp_path / "serial")
        serial.preload_relations(jobs=1)
        parallel = Pipeline(demo_corpus, db, cache_dir=tmp_path / "parallel")
        parallel.preload_relations(jobs=2)
        for doc in demo_corpus.documents:
            assert serial.relations(doc.id) == parallel.relations(doc.id)


class TestWriteArtifacts:
    def test_artifact_files(self, pipeline, tmp_path):
        result = pipeline.run_document("devices", Hyperparameters(), parent_phrase="display")
        written = {p.name for p in write_artifacts(result, tmp_path)}
        assert {
            "devices_key_nouns.json",
            "devices_relations.jsonl",
            "devices_key_phrases.json",
            "devices_key_relations.json",
            "devices_mapped_relations.json",
            "devices_bdd_display.puml",
            "devices_bdd_display.json",
            "devices_ibd_display.puml",
            "devices_ibd_display.json",
            "devices_req_display.puml",
            "devices_req_display.json",
        } <= written

    def test_unscoped_filenames(self):
        assert diagram_filename("d1", "bdd", None) == "d1_bdd"
        assert diagram_filename("d1", "req", "display") == "d1_req_display"

    def test_key_phrases_artifact_shape(self, pipeline, tmp_path):
        result = pipeline.run_document("hydraulics", Hyperparameters(), ("bdd",))
        write_artifacts(result, tmp_path)
        data = json.loads((tmp_path / "hydraulics_key_phrases.json").read_text())
        assert data and {"phrase", "lemmas", "avg_w", "avg_h", "count_norm", "lambda", "is_key"} <= set(data[0])

    def test_rerun_byte_identical(self, demo_corpus, db, tmp_path):
        for run in ("a", "b"):
            fresh = Pipeline(demo_corpus, db)
            result = fresh.run_document("sensing", Hyperparameters())
            write_artifacts(result, tmp_path / run)
        for path_a in sorted((tmp_path / "a").iterdir()):
            path_b = tmp_path / "b" / path_a.name
            assert path_a.read_bytes() == path_b.read_bytes(), path_a.name
