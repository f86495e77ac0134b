"""Live-web (or fixture-served) probes: negotiation, registries, annotations."""
from .annotations import detect_jsonld_annotations
from .cassette import CassetteMiss, CassettePlayer, CassetteRecorder
from .core import (
    REDIRECT_STATUSES,
    BodyClassification,
    BodyOutcome,
    Hop,
    NegotiationTrace,
    ProbeRequest,
    classify_body,
    probe,
    sniff_html,
)
from .matrix import (
    DEFAULT_ADVERTISED,
    MatrixCell,
    build_cells,
    check_negotiation_matrix,
    evaluate_cell,
    run_matrix,
)
from .registry import (
    DEFAULT_LOV_API_BASE,
    DEFAULT_PREFIX_CC_TEMPLATE,
    LOV,
    PREFIX_CC,
    Outcome,
    RegistryFinding,
    lookup_lov,
    lookup_prefix,
    lov_check,
    prefix_check,
)
from .transport import (
    CallableTransport,
    HttpxTransport,
    OfflineError,
    OfflineTransport,
    ProbeTimeout,
    Transport,
    TransportError,
    TransportReply,
    make_reply,
)

__all__ = [
    "BodyClassification",
    "BodyOutcome",
    "CallableTransport",
    "CassetteMiss",
    "CassettePlayer",
    "CassetteRecorder",
    "DEFAULT_ADVERTISED",
    "DEFAULT_LOV_API_BASE",
    "DEFAULT_PREFIX_CC_TEMPLATE",
    "Hop",
    "HttpxTransport",
    "LOV",
    "MatrixCell",
    "NegotiationTrace",
    "OfflineError",
    "OfflineTransport",
    "Outcome",
    "PREFIX_CC",
    "ProbeRequest",
    "ProbeTimeout",
    "REDIRECT_STATUSES",
    "RegistryFinding",
    "Transport",
    "TransportError",
    "TransportReply",
    "build_cells",
    "check_negotiation_matrix",
    "classify_body",
    "detect_jsonld_annotations",
    "evaluate_cell",
    "lookup_lov",
    "lookup_prefix",
    "lov_check",
    "make_reply",
    "prefix_check",
    "probe",
    "run_matrix",
    "sniff_html",
]
