"""Run configuration: enumeration caps, workers, output options.

Values are resolved in increasing precedence: built-in defaults, then a
key=value config file (path from ``--config`` or the PERMGRID_CONFIG
environment variable), then PERMGRID_* environment variables, then explicit
command-line flags.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field, replace

from .perm import class_size
from .tables import KIND_TO_CLASS

DEFAULT_CAPS = {"all": 9, "involutions": 12, "ffi": 14}

ENV_PREFIX = "PERMGRID_"

_CONFIG_KEYS = {
    "cap_all": int,
    "cap_involutions": int,
    "cap_ffi": int,
    "workers": int,
    "gf_margin": int,
    "color_fill": str,
    "color_line": str,
    "color_h_path": str,
    "color_v_path": str,
    "color_marker": str,
}


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    cap_all: int = DEFAULT_CAPS["all"]
    cap_involutions: int = DEFAULT_CAPS["involutions"]
    cap_ffi: int = DEFAULT_CAPS["ffi"]
    workers: int = 1
    gf_margin: int = 0
    verbosity: int = 0
    colors: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if min(self.cap_all, self.cap_involutions, self.cap_ffi) < 0:
            raise ValueError("caps must be >= 0")
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")

    def cap_for(self, class_kind: str) -> int:
        return {
            "all": self.cap_all,
            "involutions": self.cap_involutions,
            "ffi": self.cap_ffi,
        }[class_kind]

    def ensure_within_cap(self, table_kind: str, n: int) -> None:
        """Reject sizes past the configured cap; warn when a raised cap is
        actually being used (the stream is about to get large)."""
        class_kind = KIND_TO_CLASS[table_kind]
        cap = self.cap_for(class_kind)
        if n > cap:
            raise CapExceeded(
                f"n={n} exceeds the {class_kind} cap {cap}; raise cap_{class_kind} "
                "in the config file or environment to proceed"
            )
        if n > DEFAULT_CAPS[class_kind]:
            print(
                f"warning: streaming about {class_size(class_kind, n):,} objects "
                f"({class_kind}, n={n}); this may take a while",
                file=sys.stderr,
            )


def _parse_config_file(path: str) -> dict:
    values: dict = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            values[key] = _CONFIG_KEYS[key](value.strip())
    return values


def load_config(
    config_path: str | None = None,
    env: dict | None = None,
    workers: int | None = None,
) -> RunConfig:
    env = os.environ if env is None else env
    config = RunConfig()

    path = config_path or env.get(ENV_PREFIX + "CONFIG")
    if path:
        raw = _parse_config_file(path)
        colors = {
            key.removeprefix("color_"): value
            for key, value in raw.items()
            if key.startswith("color_")
        }
        plain = {key: value for key, value in raw.items() if not key.startswith("color_")}
        config = replace(config, colors={**config.colors, **colors}, **plain)

    for key in ("cap_all", "cap_involutions", "cap_ffi", "workers", "gf_margin"):
        value = env.get(ENV_PREFIX + key.upper())
        if value is not None:
            config = replace(config, **{key: int(value)})

    if workers is not None:
        config = replace(config, workers=workers)
    return config
