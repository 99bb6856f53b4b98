"""Optional ``kmroots.toml`` settings: plain ``key = value`` lines.

Recognised keys are ``height`` and ``max_cosets``.  Command-line flags
override the file, which overrides the built-in defaults.
"""

from __future__ import annotations

from pathlib import Path

from .classify import DEFAULT_HEIGHT
from .coset import DEFAULT_MAX_COSETS

DEFAULTS = {"height": DEFAULT_HEIGHT, "max_cosets": DEFAULT_MAX_COSETS}
CONFIG_NAME = "kmroots.toml"


class ConfigError(ValueError):
    pass


def parse_config(text: str) -> dict:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line or (line.startswith("[") and line.endswith("]")):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in DEFAULTS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            number = int(value.replace("_", ""))
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: {key} must be an integer") from exc
        if number < 1:
            raise ConfigError(f"line {lineno}: {key} must be positive")
        out[key] = number
    return out


def load_settings(path=None, cwd=None) -> dict:
    """Defaults updated by ``path`` (or ``kmroots.toml`` in ``cwd`` when present)."""
    settings = dict(DEFAULTS)
    if path is None:
        candidate = Path(cwd or ".") / CONFIG_NAME
        if not candidate.is_file():
            return settings
        path = candidate
    settings.update(parse_config(Path(path).read_text(encoding="utf-8")))
    return settings
