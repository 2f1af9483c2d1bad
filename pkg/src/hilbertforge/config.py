"""Runtime limits and defaults.

Precedence, lowest first: built-in defaults, ``hilbertforge.toml``, the
``HF_ENUM_CAP`` environment variable, explicit command-line flags.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

DEFAULT_ENUM_CAP = 10**7
CONFIG_FILENAME = "hilbertforge.toml"


@dataclass(frozen=True)
class Settings:
    enum_cap: int = DEFAULT_ENUM_CAP
    k_max: int = 12
    window: int = 3
    threads: int | None = None


def default_cap() -> int:
    raw = os.environ.get("HF_ENUM_CAP")
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"HF_ENUM_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"HF_ENUM_CAP must be positive, got {cap}")
    return cap


def load_settings(path: str | Path | None = None) -> Settings:
    settings = Settings()
    if path is None and Path(CONFIG_FILENAME).is_file():
        path = CONFIG_FILENAME
    if path is not None:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
        known = {f.name for f in fields(Settings)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown keys in {path}: {sorted(unknown)}")
        settings = replace(settings, **data)
    if "HF_ENUM_CAP" in os.environ:
        settings = replace(settings, enum_cap=default_cap())
    return settings
