"""Command-line interface: artifact generation, determinism, error paths."""

import json

import pytest
from click.testing import CliRunner

from sysmlforge.cli import main
from sysmlforge.corpus import demo_corpus_dir


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def corpus_arg():
    return str(demo_corpus_dir())


class TestIngest:
    def test_manifest_and_advisories(self, runner, corpus_arg, tmp_path):
        result = runner.invoke(main, ["ingest", "--corpus", corpus_arg, "--out", str(tmp_path)])
        assert result.exit_code == 0, result.output
        manifest = json.loads((tmp_path / "corpus_manifest.json").read_text())
        assert {d["id"] for d in manifest} == {"devices", "hydraulics", "power", "sensing"}
        assert "small corpus" in result.output

    def test_missing_corpus_fails(self, runner, tmp_path):
        result = runner.invoke(main, ["ingest", "--out", str(tmp_path)])
        assert result.exit_code != 0


class TestExtract:
    def test_cache_files_created(self, runner, corpus_arg, tmp_path):
        result = runner.invoke(
            main, ["extract", "--corpus", corpus_arg, "--out", str(tmp_path), "--jobs", "1"]
        )
        assert result.exit_code == 0, result.output
        cache_files = list((tmp_path / "cache").glob("*.jsonl"))
        assert len(cache_files) == 4
        assert "relations" in result.output


class TestGenerate:
    def test_all_types_with_parent(self, runner, corpus_arg, tmp_path):
        result = runner.invoke(
            main,
            [
                "generate",
                "--corpus", corpus_arg,
                "--doc", "devices",
                "--type", "all",
                "--parent", "display",
                "--out", str(tmp_path),
            ],
        )
        assert result.exit_code == 0, result.output
        for stem in ("devices_bdd_display", "devices_ibd_display", "devices_req_display"):
            assert (tmp_path / f"{stem}.puml").exists()
            assert (tmp_path / f"{stem}.json").exists()
        puml = (tmp_path / "devices_bdd_display.puml").read_text()
        assert puml.startswith("@startuml\n") and puml.rstrip().endswith("@enduml")

    def test_single_type_unscoped(self, runner, corpus_arg, tmp_path):
        result = runner.invoke(
            main,
            ["generate", "--corpus", corpus_arg, "--doc", "power", "--type", "bdd", "--out", str(tmp_path)],
        )
        assert result.exit_code == 0, result.output
        assert (tmp_path / "power_bdd.puml").exists()
        assert not (tmp_path / "power_ibd.puml").exists()

    def test_rerun_byte_identical(self, runner, corpus_arg, tmp_path):
        args = lambda out: [
            "generate", "--corpus", corpus_arg, "--doc", "sensing", "--type", "all", "--out", str(out),
        ]
        assert runner.invoke(main, args(tmp_path / "one")).exit_code == 0
        assert runner.invoke(main, args(tmp_path / "two")).exit_code == 0
        names = sorted(p.name for p in (tmp_path / "one").iterdir() if p.is_file())
        assert names
        for name in names:
            assert (tmp_path / "one" / name).read_bytes() == (tmp_path / "two" / name).read_bytes()

    def test_unknown_document_exits_nonzero(self, runner, corpus_arg, tmp_path):
        result = runner.invoke(
            main, ["generate", "--corpus", corpus_arg, "--doc", "nope", "--out", str(tmp_path)]
        )
        assert result.exit_code != 0
        assert "unknown document" in result.output

    def test_unknown_parent_lists_candidates(self, runner, corpus_arg, tmp_path):
        result = runner.invoke(
            main,
            ["generate", "--corpus", corpus_arg, "--doc", "devices", "--parent", "displai", "--out", str(tmp_path)],
        )
        assert result.exit_code != 0
        assert "display" in result.output

    def test_missing_wordnet_dir_exits_nonzero(self, runner, corpus_arg, tmp_path):
        result = runner.invoke(
            main,
            [
                "generate",
                "--corpus", corpus_arg,
                "--wordnet-dir", str(tmp_path / "nowhere"),
                "--out", str(tmp_path),
            ],
        )
        assert result.exit_code != 0

    def test_out_of_range_sigma_rejected(self, runner, corpus_arg, tmp_path):
        result = runner.invoke(
            main,
            ["generate", "--corpus", corpus_arg, "--sigma-p", "9", "--out", str(tmp_path)],
        )
        assert result.exit_code != 0
        assert "sigma_p" in result.output

    def test_default_document_announced(self, runner, corpus_arg, tmp_path):
        result = runner.invoke(
            main, ["generate", "--corpus", corpus_arg, "--type", "bdd", "--out", str(tmp_path)]
        )
        assert result.exit_code == 0, result.output
        assert "using devices" in result.output

    def test_debug_weights_csv(self, runner, corpus_arg, tmp_path):
        result = runner.invoke(
            main,
            [
                "generate", "--corpus", corpus_arg, "--doc", "power",
                "--type", "bdd", "--out", str(tmp_path), "--debug-weights",
            ],
        )
        assert result.exit_code == 0, result.output
        csv_text = (tmp_path / "power_noun_weights.csv").read_text()
        assert csv_text.startswith("term,count,tf,df,idf,w\n")
        assert "battery," in csv_text


class TestEvaluate:
    def test_report_and_figure(self, runner, corpus_arg, tmp_path):
        truth_dir = tmp_path / "truth"
        truth_dir.mkdir()
        truth = {
            "document_id": "hydraulics",
            "phrases": [["pump"], ["water"], ["valve"]],
            "relations": [
                {"subject": "pump", "object": "water", "kind": "reference", "direction": "none"}
            ],
        }
        (truth_dir / "hydraulics.json").write_text(json.dumps(truth))
        result = runner.invoke(
            main,
            [
                "evaluate",
                "--corpus", corpus_arg,
                "--truth", str(truth_dir),
                "--out", str(tmp_path / "out"),
            ],
        )
        assert result.exit_code == 0, result.output
        assert (tmp_path / "out" / "report.csv").exists()
        assert (tmp_path / "out" / "report.png").exists()
        assert "hydraulics" in result.output

    def test_empty_truth_dir_fails(self, runner, corpus_arg, tmp_path):
        truth_dir = tmp_path / "truth"
        truth_dir.mkdir()
        result = runner.invoke(
            main,
            ["evaluate", "--corpus", corpus_arg, "--truth", str(truth_dir), "--out", str(tmp_path)],
        )
        assert result.exit_code != 0
