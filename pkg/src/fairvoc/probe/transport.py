"""HTTP transports: live httpx, in-process handlers, and an offline stub.

probe() follows redirects manually to record every hop, so transports never
follow redirects themselves.
"""
from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Mapping, Optional, Protocol, Tuple

import httpx


class TransportError(Exception):
    """Transport-level failure (DNS, TLS, refused connection, ...)."""


class ProbeTimeout(TransportError):
    """The request did not complete within the allotted time."""


class OfflineError(TransportError):
    """Networking is disabled for this run; no socket may be opened."""


@dataclass(frozen=True)
class TransportReply:
    status: int
    headers: Tuple[Tuple[str, str], ...]
    body: bytes = b""

    def header(self, name: str) -> Optional[str]:
        wanted = name.lower()
        for key, value in self.headers:
            if key.lower() == wanted:
                return value
        return None

    @property
    def media_type(self) -> Optional[str]:
        content_type = self.header("content-type")
        if content_type is None:
            return None
        return content_type.split(";")[0].strip().lower()


def make_reply(
    status: int, headers: Optional[Mapping[str, str]] = None, body: bytes = b""
) -> TransportReply:
    return TransportReply(status, tuple(sorted((headers or {}).items())), body)


class Transport(Protocol):
    def send(
        self, method: str, url: str, headers: Mapping[str, str], timeout: float
    ) -> TransportReply:
        ...


class OfflineTransport:
    """Refuses every request; proves no socket is opened in offline mode."""

    def __init__(self):
        self.attempts = 0

    def send(self, method, url, headers, timeout) -> TransportReply:
        self.attempts += 1
        raise OfflineError(f"offline mode: refused {method} {url}")


class CallableTransport:
    """Adapts a plain handler function; the fixture-server building block."""

    def __init__(self, handler: Callable[[str, str, Mapping[str, str]], TransportReply]):
        self._handler = handler

    def send(self, method, url, headers, timeout) -> TransportReply:
        return self._handler(method, url, headers)


class _RateLimiter:
    """Minimum interval between requests, shared across probe threads."""

    def __init__(self, interval: float):
        self.interval = interval
        self._lock = threading.Lock()
        self._last = 0.0

    def wait(self) -> None:
        if self.interval <= 0:
            return
        with self._lock:
            now = time.monotonic()
            delay = self._last + self.interval - now
            if delay > 0:
                time.sleep(delay)
                now = time.monotonic()
            self._last = now


class HttpxTransport:
    """Live transport with bounded retries and exponential backoff."""

    def __init__(
        self,
        client: Optional[httpx.Client] = None,
        retries: int = 2,
        backoff: float = 0.5,
        rate_interval: float = 0.0,
        sleep: Callable[[float], None] = time.sleep,
    ):
        self._client = client or httpx.Client(follow_redirects=False)
        self.retries = retries
        self.backoff = backoff
        self._limiter = _RateLimiter(rate_interval)
        self._sleep = sleep

    def send(self, method, url, headers, timeout) -> TransportReply:
        attempt = 0
        while True:
            self._limiter.wait()
            try:
                request = self._client.build_request(
                    method, url, headers=dict(headers), timeout=timeout
                )
                if "accept" not in {k.lower() for k in headers}:
                    request.headers.pop("accept", None)
                response = self._client.send(request, follow_redirects=False)
                return TransportReply(
                    response.status_code,
                    tuple(sorted(response.headers.items())),
                    response.content,
                )
            except httpx.TimeoutException as exc:
                error: TransportError = ProbeTimeout(str(exc) or "timed out")
            except httpx.TransportError as exc:
                error = TransportError(str(exc) or exc.__class__.__name__)
            if attempt >= self.retries:
                raise error
            self._sleep(self.backoff * (2**attempt))
            attempt += 1
