"""Command-line interface: check, scaffold, diagram, catalog."""
from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Optional, TextIO

from . import __version__
from .audit import InvalidIri
from .audit.catalog import CATALOG
from .config import AuditConfig, env_cassette_dir, load_config
from .diagram import NotationStyle, build_diagram, emit_diagram
from .probe import (
    CassettePlayer,
    CassetteRecorder,
    HttpxTransport,
    OfflineTransport,
    ProbeRequest,
    Transport,
    probe,
)
from .rdf import (
    OntologyModel,
    RdfError,
    RdfFormat,
    detect_format,
    parse_ontology,
)
from .report import assemble_report, category_for, exit_code, render_report
from .runner import audit_model
from .scaffold import (
    InvalidConfig,
    load_scaffold_config,
    materialize_release,
    plan_release,
    write_release,
)

FIXED_TIMESTAMP = "2020-01-01T00:00:00Z"


class AuditError(Exception):
    """Runtime failure that should exit with status 2."""


def _utc_now() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fairvoc",
        description="Audit web vocabularies against FAIR publication practices "
        "and scaffold the publication artifacts.",
    )
    parser.add_argument("--version", action="version", version=f"fairvoc {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="audit an ontology file or IRI")
    check.add_argument("subject", help="path to an ontology document, or its IRI")
    check.add_argument("--offline", action="store_true", help="never open a socket")
    check.add_argument("--format", choices=("json", "md"), default="md")
    check.add_argument("--cassette", metavar="DIR", default=None,
                       help="record (online) or replay (offline) HTTP exchanges here")
    check.add_argument("--timeout", type=float, default=None, metavar="SECS")
    check.add_argument("--config", metavar="FILE", default=None,
                       help="key=value file for weights/thresholds/endpoints")
    check.add_argument("--fixed-clock", action="store_true",
                       help="freeze report timestamps (golden-file testing)")

    scaffold = commands.add_parser("scaffold", help="generate publication artifacts")
    scaffold.add_argument("config", help="scaffold configuration file")
    scaffold.add_argument("--out", metavar="DIR", default="dist")
    scaffold.add_argument("--dry-run", action="store_true",
                          help="print the release layout without writing")

    diagram = commands.add_parser("diagram", help="emit a notation diagram (DOT)")
    diagram.add_argument("subject", help="path to an ontology document, or its IRI")
    diagram.add_argument("--style", choices=("arrows", "diamonds"), default="arrows")
    diagram.add_argument("--out", metavar="FILE", default=None)
    diagram.add_argument("--offline", action="store_true")
    diagram.add_argument("--cassette", metavar="DIR", default=None)
    diagram.add_argument("--timeout", type=float, default=None, metavar="SECS")

    catalog = commands.add_parser("catalog", help="print the check catalog")
    catalog.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _resolve_transport(
    offline: bool, cassette_dir: Optional[str], injected: Optional[Transport]
) -> Transport:
    if offline:
        if cassette_dir:
            return CassettePlayer(Path(cassette_dir))
        return OfflineTransport()
    base = injected if injected is not None else HttpxTransport()
    if cassette_dir:
        return CassetteRecorder(Path(cassette_dir), base)
    return base


def _load_subject(subject: str, transport: Transport, timeout: float) -> OntologyModel:
    path = Path(subject)
    if path.exists():
        data = path.read_bytes()
        fmt = detect_format(data, hint=path.name)
        return parse_ontology(data, fmt)
    if subject.startswith(("http://", "https://")):
        trace = probe(
            ProbeRequest(subject, accept="text/turtle", timeout=timeout), transport
        )
        if trace.failure is not None:
            raise AuditError(f"cannot fetch {subject}: {trace.failure}")
        if trace.final_status != 200:
            raise AuditError(
                f"cannot fetch {subject}: final status {trace.final_status}"
            )
        hint = trace.final_media_type or trace.final_url
        fmt = detect_format(trace.final_body, hint=hint)
        return parse_ontology(trace.final_body, fmt)
    raise AuditError(f"{subject!r} is neither an existing file nor an absolute IRI")


def _run_check(args, transport_override, now, stdout) -> int:
    config = load_config(Path(args.config) if args.config else None)
    if args.timeout is not None:
        from dataclasses import replace

        config = replace(config, timeout=args.timeout)
    cassette_dir = args.cassette or env_cassette_dir()
    transport = _resolve_transport(args.offline, cassette_dir, transport_override)

    model = _load_subject(args.subject, transport, config.timeout)
    outcome = audit_model(model, transport, config)
    timestamp = FIXED_TIMESTAMP if args.fixed_clock else now()
    report = assemble_report(
        outcome.results,
        subject=args.subject,
        tool_version=__version__,
        timestamp=timestamp,
        environment={
            "mode": "offline" if args.offline else "online",
            "cassette": bool(cassette_dir),
            "fixed_clock": bool(args.fixed_clock),
        },
        config=config,
    )
    stdout.write(render_report(report, args.format))
    return exit_code(outcome.results)


def _run_scaffold(args, stdout) -> int:
    config, ontology_path = load_scaffold_config(Path(args.config))
    data = ontology_path.read_bytes()
    model = parse_ontology(data, detect_format(data, hint=ontology_path.name))
    if args.dry_run:
        stdout.write(plan_release(config, model).describe() + "\n")
        return 0
    contents = materialize_release(config, model)
    written = write_release(contents, Path(args.out))
    for rel_path in written:
        stdout.write(f"wrote {args.out}/{rel_path}\n")
    return 0


def _run_diagram(args, transport_override, stdout) -> int:
    cassette_dir = args.cassette or env_cassette_dir()
    transport = _resolve_transport(args.offline, cassette_dir, transport_override)
    timeout = args.timeout if args.timeout is not None else 30.0
    model = _load_subject(args.subject, transport, timeout)
    style = NotationStyle.ARROWS if args.style == "arrows" else NotationStyle.DIAMONDS
    diagram = build_diagram(model, style)
    text = emit_diagram(diagram)
    if args.out:
        Path(args.out).write_text(text)
        stdout.write(f"wrote {args.out}\n")
    else:
        stdout.write(text)
    if diagram.skipped:
        stdout.write(f"// note: {len(diagram.skipped)} axiom(s) were not mappable\n")
    return 0


def _run_catalog(args, stdout) -> int:
    if args.format == "json":
        import json

        entries = [
            {
                "id": entry.check_id,
                "description": entry.description,
                "severity": entry.severity.value,
                "category": category_for(entry.check_id.replace("*", "x")).value,
                "ref": entry.ref,
            }
            for entry in CATALOG
        ]
        stdout.write(json.dumps(entries, indent=2) + "\n")
        return 0
    width = max(len(entry.check_id) for entry in CATALOG)
    for entry in CATALOG:
        category = category_for(entry.check_id.replace("*", "x"))
        stdout.write(
            f"{entry.check_id.ljust(width)}  {entry.severity.value:13}  "
            f"{category.value:13}  {entry.ref}: {entry.description}\n"
        )
    return 0


def cli_main(
    argv: Optional[list] = None,
    transport: Optional[Transport] = None,
    now: Optional[Callable[[], str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Exit 0: no recommended failure. 1: at least one. 2: usage/runtime error."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    now = now or _utc_now
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if args.command == "check":
            return _run_check(args, transport, now, stdout)
        if args.command == "scaffold":
            return _run_scaffold(args, stdout)
        if args.command == "diagram":
            return _run_diagram(args, transport, stdout)
        return _run_catalog(args, stdout)
    except (AuditError, RdfError, InvalidConfig, InvalidIri, OSError, ValueError) as exc:
        stderr.write(f"fairvoc: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
