from __future__ import annotations

import json

import pytest

from fairvoc.audit import CheckStatus, Termination, extract_metadata, parse_semver
from fairvoc.probe import CallableTransport, detect_jsonld_annotations, run_matrix
from fairvoc.rdf import OWL, Iri, Literal, RdfFormat, parse_ontology
from fairvoc.scaffold import (
    Generated,
    InvalidConfig,
    MissingTitle,
    ScaffoldConfig,
    VersionInNamespace,
    embed_in_script,
    generate_htaccess,
    generate_jsonld_snippet,
    materialize_release,
    plan_release,
    stamp_version,
    write_release,
)
from apache_sim import ApacheSim

DOC_BASE = "https://example-pages.github.io/example"


def reference_config(**overrides) -> ScaffoldConfig:
    defaults = dict(
        ontology_iri="https://w3id.org/example#",
        latest_version=parse_semver("1.0.1"),
        all_versions=(parse_semver("1.0.0"), parse_semver("1.0.1")),
        doc_base_url=DOC_BASE,
        termination=Termination.HASH,
    )
    defaults.update(overrides)
    return ScaffoldConfig(**defaults)


class TestConfig:
    def test_latest_must_be_listed(self):
        with pytest.raises(InvalidConfig):
            reference_config(all_versions=(parse_semver("1.0.0"),))

    def test_turtle_is_mandatory(self):
        with pytest.raises(InvalidConfig):
            reference_config(supported_formats=(RdfFormat.RDF_XML,))

    def test_empty_versions(self):
        with pytest.raises(InvalidConfig):
            reference_config(all_versions=())


class TestGenerateHtaccess:
    def test_required_directives_in_order(self):
        text = generate_htaccess(reference_config())
        lines = [l for l in text.splitlines() if l and not l.startswith("#")]
        assert lines[0] == "Options -MultiViews"
        assert "AddType text/turtle .ttl" in lines
        assert lines.index("Options -MultiViews") < lines.index("AddType text/turtle .ttl")
        assert lines.index("AddType text/turtle .ttl") < lines.index("RewriteEngine on")

    def test_latest_version_targets(self):
        text = generate_htaccess(reference_config())
        assert f"RewriteRule ^$ {DOC_BASE}/release/1.0.1/index-en.html [R=303,L]" in text
        assert f"RewriteRule ^$ {DOC_BASE}/release/1.0.1/ontology.ttl [R=303,L]" in text

    def test_per_version_capture(self):
        text = generate_htaccess(reference_config())
        assert (
            f"RewriteRule ^(1\\.0\\.0|1\\.0\\.1)$ {DOC_BASE}/release/$1/index-en.html [R=303,L]"
            in text
        )

    def test_single_version_has_no_other_capture(self):
        config = reference_config(
            latest_version=parse_semver("1.0.0"), all_versions=(parse_semver("1.0.0"),)
        )
        text = generate_htaccess(config)
        assert "^(1\\.0\\.0)$" in text
        assert "1\\.0\\.0|" not in text
        assert "R=406" in text

    def test_406_rule_excludes_supported_and_wildcards(self):
        text = generate_htaccess(reference_config())
        tail = text[text.index("R=406") - 800 : text.index("R=406")]
        assert "!^$" in tail
        assert r"!\*/\*" in tail
        assert "!text/turtle" in tail
        assert "!text/html" in tail

    def test_default_rule_is_last(self):
        text = generate_htaccess(reference_config())
        rules = [l for l in text.splitlines() if l.startswith("RewriteRule")]
        assert rules[-1] == f"RewriteRule ^$ {DOC_BASE}/release/1.0.1/ontology.ttl [R=303,L]"

    def test_extra_formats_get_addtype_and_rules(self):
        config = reference_config(
            supported_formats=(RdfFormat.TURTLE, RdfFormat.RDF_XML, RdfFormat.JSON_LD)
        )
        text = generate_htaccess(config)
        assert "AddType application/ld+json .jsonld" in text
        assert "AddType application/rdf" not in text  # stock mime covers .rdf
        assert f"{DOC_BASE}/release/1.0.1/ontology.rdf [R=303,L]" in text
        assert f"{DOC_BASE}/release/1.0.1/ontology.jsonld [R=303,L]" in text


class TestSnippet:
    def test_reference_example_field_set(self, example_model):
        meta = extract_metadata(example_model)
        snippet = json.loads(generate_jsonld_snippet(meta, "https://w3id.org/example#"))
        assert set(snippet) == {
            "@context",
            "@type",
            "url",
            "name",
            "datePublished",
            "version",
            "license",
            "author",
        }
        assert snippet["@context"] == "http://schema.org"
        assert snippet["@type"] == "WebPage"
        assert snippet["url"] == "https://w3id.org/example"
        assert snippet["version"] == "1.0.1"
        assert [a["@type"] for a in snippet["author"]] == ["Person", "Person"]
        assert {a["name"] for a in snippet["author"]} == {"Jane Roe", "Alex Doe"}

    def test_title_only_minimal_output(self):
        doc = (
            "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
            "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
            "@prefix dcterms: <http://purl.org/dc/terms/> .\n"
            '<https://w3id.org/min> rdf:type owl:Ontology ; dcterms:title "Minimal" .'
        )
        meta = extract_metadata(parse_ontology(doc.encode(), RdfFormat.TURTLE))
        snippet = json.loads(generate_jsonld_snippet(meta, "https://w3id.org/min"))
        assert set(snippet) == {"@context", "@type", "url", "name"}

    def test_missing_title_raises(self):
        doc = (
            "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
            "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
            "<https://w3id.org/min> rdf:type owl:Ontology ."
        )
        meta = extract_metadata(parse_ontology(doc.encode(), RdfFormat.TURTLE))
        with pytest.raises(MissingTitle):
            generate_jsonld_snippet(meta, "https://w3id.org/min")

    def test_snippet_passes_detector(self, example_model):
        meta = extract_metadata(example_model)
        snippet = generate_jsonld_snippet(meta, "https://w3id.org/example#")
        page = f"<html><head>{embed_in_script(snippet)}</head><body></body></html>"
        result = detect_jsonld_annotations(page)
        assert result.status is CheckStatus.PASS
        assert "trailing comma" not in result.evidence  # ours is strict JSON


class TestPlanRelease:
    def test_reference_layout_paths(self, example_model):
        layout = plan_release(reference_config(), example_model)
        paths = layout.paths()
        assert ".htaccess" in paths
        assert "406.html" in paths
        assert "release/1.0.1/ontology.ttl" in paths
        assert "release/1.0.1/index-en.html" in paths
        assert "release/1.0.0/ontology.ttl" in paths

    def test_two_version_directories(self, example_model):
        layout = plan_release(reference_config(), example_model)
        versions = {p.split("/")[1] for p in layout.paths() if p.startswith("release/")}
        assert versions == {"1.0.0", "1.0.1"}

    def test_every_entry_is_generated(self, example_model):
        layout = plan_release(reference_config(), example_model)
        assert all(isinstance(source, Generated) for _, source in layout.entries)

    def test_describe_is_dry_run_friendly(self, example_model):
        text = plan_release(reference_config(), example_model).describe()
        assert "generated:htaccess" in text

    def test_write_release(self, tmp_path, example_model):
        contents = materialize_release(reference_config(), example_model)
        written = write_release(contents, tmp_path)
        assert (tmp_path / ".htaccess").exists()
        assert (tmp_path / "release/1.0.1/ontology.ttl").exists()
        assert set(written) == set(contents)

    def test_copies_are_written(self, tmp_path, fixtures_dir, example_model):
        contents = materialize_release(reference_config(), example_model)
        written = write_release(
            contents, tmp_path, copies={"logo.png": fixtures_dir / "example_ontology.ttl"}
        )
        assert "logo.png" in written
        assert (tmp_path / "logo.png").exists()


class TestStampVersion:
    def test_first_release_matches_published_header(self, versioning_model):
        base_triples = [
            t
            for t in versioning_model.triples
            if t[1] not in (OWL.versionIRI, OWL.versionInfo)
        ]
        from fairvoc.rdf import build_model

        bare = build_model(base_triples)
        stamped = stamp_version(bare, parse_semver("1.0.0"))
        assert stamped.triples == versioning_model.triples

    def test_prior_version_added(self, versioning_model):
        stamped = stamp_version(versioning_model, parse_semver("1.0.1"), parse_semver("1.0.0"))
        subject = Iri(stamped.ontology_iri)
        assert stamped.objects(subject, OWL.priorVersion) == (
            Iri("https://w3id.org/example/1.0.0"),
        )
        assert stamped.objects(subject, OWL.versionInfo) == (
            Literal("1.0.1", language="en"),
        )

    def test_idempotent(self, versioning_model):
        once = stamp_version(versioning_model, parse_semver("2.0.0"), parse_semver("1.0.0"))
        twice = stamp_version(once, parse_semver("2.0.0"), parse_semver("1.0.0"))
        assert once.triples == twice.triples

    def test_versioned_namespace_refused(self):
        doc = (
            "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
            "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
            "<https://w3id.org/example/1.0.0> rdf:type owl:Ontology ."
        )
        model = parse_ontology(doc.encode(), RdfFormat.TURTLE)
        with pytest.raises(VersionInNamespace):
            stamp_version(model, parse_semver("1.0.1"))


class TestServedScaffold:
    def test_generated_site_passes_the_negotiation_matrix(self, example_model):
        config = reference_config()
        contents = materialize_release(config, example_model)
        sim = ApacheSim(
            contents[".htaccess"].decode(),
            vocab_base="https://w3id.org/example",
            doc_base=DOC_BASE,
            files={k: v for k, v in contents.items() if k != ".htaccess"},
        )
        version_iris = [config.version_iri(v) for v in config.all_versions]
        advertised = ["text/html"] + [f.media_type for f in config.supported_formats]
        results, _ = run_matrix(
            config.ontology_iri, version_iris, CallableTransport(sim), advertised=advertised
        )
        assert all(
            r.status in (CheckStatus.PASS, CheckStatus.INFO) for r in results
        ), [(r.check_id, r.status, r.evidence) for r in results if r.status not in (CheckStatus.PASS, CheckStatus.INFO)]
