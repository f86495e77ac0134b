"""Record/replay cassettes so network-dependent audits run offline in CI.

One JSON document per recorded exchange:
  {"request": {"method", "url", "headers"}, "response": {"status", "headers", "body-base64"}}
Exchanges are keyed by (method, url, Accept header).
"""
from __future__ import annotations

import base64
import hashlib
import json
import threading
from pathlib import Path
from typing import Dict, Mapping, Optional, Tuple

from .transport import OfflineError, Transport, TransportReply


class CassetteMiss(OfflineError):
    """Replay requested for an exchange that was never recorded.

    Subclasses OfflineError: a replay miss means the offline run lacks data,
    so dependent checks report Skipped rather than Fail.
    """


def _key(method: str, url: str, accept: Optional[str]) -> str:
    material = "|".join((method.upper(), url, accept or "<none>"))
    return hashlib.sha256(material.encode("utf-8")).hexdigest()[:24]


def _accept_of(headers: Mapping[str, str]) -> Optional[str]:
    for name, value in headers.items():
        if name.lower() == "accept":
            return value
    return None


class CassetteRecorder:
    """Write-through transport: forwards to `inner` and saves each exchange."""

    def __init__(self, directory: Path, inner: Transport):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._inner = inner
        self._lock = threading.Lock()

    def send(self, method, url, headers, timeout) -> TransportReply:
        reply = self._inner.send(method, url, headers, timeout)
        accept = _accept_of(headers)
        document = {
            "request": {
                "method": method.upper(),
                "url": url,
                "headers": {"Accept": accept} if accept is not None else {},
            },
            "response": {
                "status": reply.status,
                "headers": dict(reply.headers),
                "body-base64": base64.b64encode(reply.body).decode("ascii"),
            },
        }
        path = self.directory / f"{_key(method, url, accept)}.json"
        with self._lock:
            path.write_text(json.dumps(document, indent=2, sort_keys=True) + "\n")
        return reply


class CassettePlayer:
    """Replay-only transport; a miss raises CassetteMiss, never touches the net."""

    def __init__(self, directory: Path):
        self.directory = Path(directory)
        self._exchanges: Dict[str, TransportReply] = {}
        for path in sorted(self.directory.glob("*.json")):
            document = json.loads(path.read_text())
            request = document["request"]
            response = document["response"]
            key = _key(
                request.get("method", "GET"),
                request["url"],
                request.get("headers", {}).get("Accept"),
            )
            self._exchanges[key] = TransportReply(
                response["status"],
                tuple(sorted(response.get("headers", {}).items())),
                base64.b64decode(response.get("body-base64", "")),
            )

    def __len__(self) -> int:
        return len(self._exchanges)

    def send(self, method, url, headers, timeout) -> TransportReply:
        key = _key(method, url, _accept_of(headers))
        try:
            return self._exchanges[key]
        except KeyError:
            raise CassetteMiss(
                f"no recorded exchange for {method} {url} "
                f"(Accept: {_accept_of(headers) or '<none>'})"
            ) from None
