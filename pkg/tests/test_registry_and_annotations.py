from __future__ import annotations

import json

import pytest

from fairvoc.audit import CheckStatus, Severity
from fairvoc.probe import (
    CallableTransport,
    OfflineTransport,
    Outcome,
    detect_jsonld_annotations,
    lookup_lov,
    lookup_prefix,
    lov_check,
    make_reply,
    prefix_check,
)
from reference_server import NAMESPACE, reference_server

FIXED_CLOCK = lambda: "2020-01-01T00:00:00Z"  # noqa: E731


class TestPrefixLookup:
    def test_registered_matching_prefix_passes(self):
        finding = lookup_prefix("exo", CallableTransport(reference_server), clock=FIXED_CLOCK)
        assert finding.outcome is Outcome.FOUND
        assert finding.value == NAMESPACE
        assert finding.fetched_at == "2020-01-01T00:00:00Z"
        assert prefix_check(finding, NAMESPACE).status is CheckStatus.PASS

    def test_collision_with_other_namespace_fails(self):
        def registry(method, url, headers):
            return make_reply(
                200, {"Content-Type": "text/plain"}, b"example\thttp://example.org/\n"
            )

        finding = lookup_prefix("example", CallableTransport(registry), clock=FIXED_CLOCK)
        assert finding.outcome is Outcome.FOUND
        result = prefix_check(finding, "https://w3id.org/example#")
        assert result.status is CheckStatus.FAIL
        assert "example.org" in result.evidence

    def test_unregistered_prefix_warns(self):
        finding = lookup_prefix("zzzz", CallableTransport(reference_server), clock=FIXED_CLOCK)
        assert finding.outcome is Outcome.NOT_FOUND
        assert prefix_check(finding, NAMESPACE).status is CheckStatus.WARN

    def test_offline_is_skipped_never_notfound(self):
        finding = lookup_prefix("exo", OfflineTransport(), clock=FIXED_CLOCK)
        assert finding.outcome is Outcome.UNREACHABLE
        assert finding.detail
        assert prefix_check(finding, NAMESPACE).status is CheckStatus.SKIPPED


class TestLovLookup:
    def test_registered_namespace_found(self):
        payload = {
            "total_count": 1,
            "results": [
                {"uri": ["http://www.w3.org/ns/dcat#"], "prefixedName": ["dcat"]}
            ],
        }

        def registry(method, url, headers):
            return make_reply(200, {"Content-Type": "application/json"}, json.dumps(payload).encode())

        finding = lookup_lov("http://www.w3.org/ns/dcat#", CallableTransport(registry), clock=FIXED_CLOCK)
        assert finding.outcome is Outcome.FOUND
        assert lov_check(finding).status is CheckStatus.PASS

    def test_fresh_namespace_not_found_is_info(self):
        finding = lookup_lov(
            "https://w3id.org/example#", CallableTransport(reference_server), clock=FIXED_CLOCK
        )
        assert finding.outcome is Outcome.NOT_FOUND
        result = lov_check(finding)
        assert result.status is CheckStatus.INFO
        assert result.severity is Severity.OPTIONAL

    def test_offline_skips(self):
        finding = lookup_lov("https://w3id.org/example#", OfflineTransport(), clock=FIXED_CLOCK)
        assert finding.outcome is Outcome.UNREACHABLE
        assert lov_check(finding).status is CheckStatus.SKIPPED

    def test_http_error_is_unreachable(self):
        def registry(method, url, headers):
            return make_reply(500, {}, b"oops")

        finding = lookup_lov("https://w3id.org/example#", CallableTransport(registry), clock=FIXED_CLOCK)
        assert finding.outcome is Outcome.UNREACHABLE


# the published snippet shape, including its trailing comma after the author
# array, which strict JSON rejects
PUBLISHED_SNIPPET_PAGE = """<html><head>
<script type="application/ld+json">{
   "@context":"http://schema.org",
   "@type":"WebPage",
   "url":"https://w3id.org/example",
   "name":"The example ontology",
   "datePublished":"4-2-2020",
   "version":"1.0.1",
   "license":"http://creativecommons.org/licenses/by/2.0/",
   "author":[{"@type":"Person","name":"Jane Roe"},
             {"@type":"Person","name":"Alex Doe"}],
}</script>
</head><body>doc</body></html>"""


class TestJsonLdAnnotations:
    def test_published_snippet_shape_passes(self):
        result = detect_jsonld_annotations(PUBLISHED_SNIPPET_PAGE)
        assert result.status is CheckStatus.PASS
        assert set(result.values) == {
            "url",
            "name",
            "datePublished",
            "version",
            "license",
            "author",
        }
        assert "trailing comma" in result.evidence

    def test_page_without_scripts_fails(self):
        result = detect_jsonld_annotations("<html><body>nothing here</body></html>")
        assert result.status is CheckStatus.FAIL

    def test_invalid_json_fails_with_evidence(self):
        page = '<script type="application/ld+json">{"name": </script>'
        result = detect_jsonld_annotations(page)
        assert result.status is CheckStatus.FAIL
        assert "invalid JSON" in result.evidence

    def test_wrong_context_fails(self):
        page = (
            '<script type="application/ld+json">'
            '{"@context": "http://other.example/", "url": "x"}</script>'
        )
        result = detect_jsonld_annotations(page)
        assert result.status is CheckStatus.FAIL

    def test_non_jsonld_scripts_are_ignored(self):
        page = (
            "<script>var x = 1;</script>"
            '<script type="application/ld+json">'
            '{"@context": "https://schema.org/", "name": "n"}</script>'
        )
        assert detect_jsonld_annotations(page).status is CheckStatus.PASS
