from __future__ import annotations

import io
import json
from pathlib import Path

import pytest

from fairvoc.cli import cli_main
from fairvoc.probe import CallableTransport
from fairvoc.report import report_from_json
from reference_server import ONTOLOGY_IRI, reference_server


def run_cli(argv, transport=None):
    out, err = io.StringIO(), io.StringIO()
    code = cli_main(argv, transport=transport, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def recorded_cassette(tmp_path):
    cassette = tmp_path / "cassette"
    code, _, err = run_cli(
        ["check", ONTOLOGY_IRI, "--cassette", str(cassette), "--format", "json"],
        transport=CallableTransport(reference_server),
    )
    assert code == 0, err
    return cassette


class TestCheckCommand:
    def test_conformant_fixture_file_offline(self, fixtures_dir):
        code, out, err = run_cli(
            ["check", str(fixtures_dir / "example_ontology.ttl"), "--offline"]
        )
        assert code == 0, err
        assert "| reusable | 100 |" in out

    def test_metadata_deficient_file_exits_1(self, fixtures_dir):
        code, out, _ = run_cli(["check", str(fixtures_dir / "broken.ttl"), "--offline"])
        assert code == 1
        assert "[FAIL]" in out

    def test_malformed_file_exits_2(self, fixtures_dir):
        code, _, err = run_cli(["check", str(fixtures_dir / "malformed.ttl"), "--offline"])
        assert code == 2
        assert "fairvoc: error:" in err

    def test_unknown_subject_exits_2(self):
        code, _, err = run_cli(["check", "no/such/file.ttl", "--offline"])
        assert code == 2
        assert "neither an existing file" in err

    def test_unsupported_format_flag_exits_2(self, fixtures_dir):
        code, _, _ = run_cli(
            ["check", str(fixtures_dir / "example_ontology.ttl"), "--format", "yaml"]
        )
        assert code == 2

    def test_iri_offline_without_cassette_exits_2(self):
        code, _, err = run_cli(["check", ONTOLOGY_IRI, "--offline"])
        assert code == 2
        assert "cannot fetch" in err

    def test_recorded_iri_check_replays_offline(self, recorded_cassette):
        code, out, err = run_cli(
            [
                "check",
                ONTOLOGY_IRI,
                "--offline",
                "--cassette",
                str(recorded_cassette),
                "--fixed-clock",
                "--format",
                "json",
            ]
        )
        assert code == 0, err
        report = report_from_json(out)
        assert report.timestamp == "2020-01-01T00:00:00Z"
        assert report.scores["overall"] == 100.0

    def test_cassette_dir_from_environment(self, recorded_cassette, monkeypatch):
        monkeypatch.setenv("FAIRVOC_CASSETTE_DIR", str(recorded_cassette))
        code, out, err = run_cli(
            ["check", ONTOLOGY_IRI, "--offline", "--format", "json"]
        )
        assert code == 0, err

    def test_golden_report(self, recorded_cassette, fixtures_dir):
        code, out, _ = run_cli(
            [
                "check",
                ONTOLOGY_IRI,
                "--offline",
                "--cassette",
                str(recorded_cassette),
                "--fixed-clock",
                "--format",
                "json",
            ]
        )
        assert code == 0
        golden = (fixtures_dir / "golden_report.json").read_text()
        assert out == golden

    def test_config_file_overrides(self, fixtures_dir, tmp_path):
        config = tmp_path / "fairvoc.conf"
        config.write_text("threshold.term_pass = 0.5\nweight.optional = 0.25\n")
        code, out, err = run_cli(
            [
                "check",
                str(fixtures_dir / "example_ontology.ttl"),
                "--offline",
                "--config",
                str(config),
                "--format",
                "json",
            ]
        )
        assert code == 0, err

    def test_bad_config_exits_2(self, fixtures_dir, tmp_path):
        config = tmp_path / "fairvoc.conf"
        config.write_text("no_such_key = 1\n")
        code, _, err = run_cli(
            ["check", str(fixtures_dir / "example_ontology.ttl"), "--config", str(config)]
        )
        assert code == 2
        assert "unknown configuration key" in err


class TestScaffoldCommand:
    @pytest.fixture
    def scaffold_config(self, tmp_path, fixtures_dir):
        config = tmp_path / "scaffold.conf"
        config.write_text(
            "\n".join(
                [
                    f"ontology = {fixtures_dir / 'example_ontology.ttl'}",
                    "ontology_iri = https://w3id.org/example#",
                    "latest_version = 1.0.1",
                    "versions = 1.0.0, 1.0.1",
                    "doc_base_url = https://example-pages.github.io/example",
                    "formats = turtle",
                ]
            )
            + "\n"
        )
        return config

    def test_dry_run_prints_layout(self, scaffold_config):
        code, out, err = run_cli(["scaffold", str(scaffold_config), "--dry-run"])
        assert code == 0, err
        assert ".htaccess" in out
        assert "release/1.0.1/ontology.ttl" in out
        assert "generated:" in out

    def test_writes_release_tree(self, scaffold_config, tmp_path):
        out_dir = tmp_path / "site"
        code, out, err = run_cli(["scaffold", str(scaffold_config), "--out", str(out_dir)])
        assert code == 0, err
        assert (out_dir / ".htaccess").exists()
        assert (out_dir / "release/1.0.0/index-en.html").exists()
        assert (out_dir / "406.html").exists()

    def test_missing_keys_exit_2(self, tmp_path):
        config = tmp_path / "scaffold.conf"
        config.write_text("ontology = x.ttl\n")
        code, _, err = run_cli(["scaffold", str(config)])
        assert code == 2
        assert "missing required keys" in err


class TestDiagramCommand:
    def test_dot_to_stdout(self, fixtures_dir):
        code, out, err = run_cli(
            ["diagram", str(fixtures_dir / "example_ontology.ttl"), "--offline"]
        )
        assert code == 0, err
        assert out.startswith("digraph ontology_notation {")
        assert "ExampleClassB" in out

    def test_diamonds_style_to_file(self, fixtures_dir, tmp_path):
        out_file = tmp_path / "diagram.dot"
        code, out, err = run_cli(
            [
                "diagram",
                str(fixtures_dir / "example_ontology.ttl"),
                "--style",
                "diamonds",
                "--out",
                str(out_file),
            ]
        )
        assert code == 0, err
        assert "shape=diamond" in out_file.read_text()

    def test_iri_subject_via_transport(self):
        code, out, err = run_cli(
            ["diagram", ONTOLOGY_IRI], transport=CallableTransport(reference_server)
        )
        assert code == 0, err
        assert "digraph" in out


class TestCatalogCommand:
    def test_text_listing(self):
        code, out, _ = run_cli(["catalog"])
        assert code == 0
        assert "metadata.license" in out
        assert "negotiation.ontology.turtle" in out

    def test_json_listing(self):
        code, out, _ = run_cli(["catalog", "--format", "json"])
        assert code == 0
        entries = json.loads(out)
        ids = {entry["id"] for entry in entries}
        assert "metadata.license" in ids
        assert all({"id", "description", "severity", "category", "ref"} <= set(e) for e in entries)


class TestUsage:
    def test_no_arguments_exits_2(self):
        code, _, _ = run_cli([])
        assert code == 2

    def test_unknown_command_exits_2(self):
        code, _, _ = run_cli(["frobnicate"])
        assert code == 2

    def test_version_flag(self):
        code, _, _ = run_cli(["--version"])
        assert code == 0
