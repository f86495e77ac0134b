"""Tool configuration: weights, thresholds, registry endpoints."""
from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional, Tuple

from .probe.registry import DEFAULT_LOV_API_BASE, DEFAULT_PREFIX_CC_TEMPLATE
from .scaffold.config import InvalidConfig, parse_key_values

ENV_TIMEOUT = "FAIRVOC_TIMEOUT"
ENV_CASSETTE_DIR = "FAIRVOC_CASSETTE_DIR"


@dataclass(frozen=True)
class AuditConfig:
    weight_recommended: float = 1.0
    weight_optional: float = 0.5
    weight_informational: float = 0.0
    term_pass_threshold: float = 1.0
    term_warn_threshold: float = 0.8
    prefix_cc_template: str = DEFAULT_PREFIX_CC_TEMPLATE
    lov_api_base: str = DEFAULT_LOV_API_BASE
    advertised_formats: Tuple[str, ...] = ("text/html", "text/turtle")
    direct_200_fail: bool = False
    timeout: float = 30.0
    max_redirects: int = 10
    concurrency: int = 4


_FLOAT_KEYS = {
    "weight.recommended": "weight_recommended",
    "weight.optional": "weight_optional",
    "weight.informational": "weight_informational",
    "threshold.term_pass": "term_pass_threshold",
    "threshold.term_warn": "term_warn_threshold",
    "timeout": "timeout",
}
_INT_KEYS = {"max_redirects": "max_redirects", "concurrency": "concurrency"}
_STR_KEYS = {
    "registry.prefix_cc": "prefix_cc_template",
    "registry.lov": "lov_api_base",
}


def load_config(path: Optional[Path] = None) -> AuditConfig:
    """Defaults, overlaid by the config file (if any), then the environment."""
    config = AuditConfig()
    if path is not None:
        values = parse_key_values(Path(path).read_text())
        updates = {}
        for key, value in values.items():
            if key in _FLOAT_KEYS:
                updates[_FLOAT_KEYS[key]] = float(value)
            elif key in _INT_KEYS:
                updates[_INT_KEYS[key]] = int(value)
            elif key in _STR_KEYS:
                updates[_STR_KEYS[key]] = value
            elif key == "advertised_formats":
                updates["advertised_formats"] = tuple(
                    v.strip() for v in value.split(",") if v.strip()
                )
            elif key == "negotiation.direct_200":
                if value.strip().lower() not in ("warn", "fail"):
                    raise InvalidConfig("negotiation.direct_200 must be warn or fail")
                updates["direct_200_fail"] = value.strip().lower() == "fail"
            else:
                raise InvalidConfig(f"unknown configuration key {key!r}")
        config = replace(config, **updates)

    env_timeout = os.environ.get(ENV_TIMEOUT)
    if env_timeout:
        config = replace(config, timeout=float(env_timeout))
    return config


def env_cassette_dir() -> Optional[str]:
    return os.environ.get(ENV_CASSETTE_DIR) or None
