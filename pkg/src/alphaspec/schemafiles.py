"""Access to the JSON schemas shipped under ``alphaspec/schemas``."""

from __future__ import annotations

import json
from importlib import resources

SCHEMA_NAMES = ("charpoly", "spectrum", "coronal", "invariants", "join", "certificate", "class", "report")


def load_schema(name: str) -> dict:
    if name not in SCHEMA_NAMES:
        raise KeyError(name)
    return json.loads(resources.files("alphaspec").joinpath("schemas", f"{name}.json").read_text("utf-8"))
