"""Artifact storage on any fsspec filesystem."""

import json
import logging
import math
from typing import TYPE_CHECKING, Any, Mapping

import fsspec
import numpy as np
import pandas as pd

from jja_bath.io.tables import render_csv

if TYPE_CHECKING:
    from jja_bath.junction.series import CorrelationSeries

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"


def json_ready(value: Any) -> Any:
    """Recursively convert numpy scalars and arrays; non-finite floats become None."""
    if isinstance(value, Mapping):
        return {str(k): json_ready(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_ready(v) for v in value]
    if isinstance(value, np.ndarray):
        return [json_ready(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value) if math.isfinite(value) else None
    if isinstance(value, complex):
        return {"re": json_ready(value.real), "im": json_ready(value.imag)}
    return value


class ArtifactStore:
    """Writes CSV and JSON artifacts of one run under a directory URL."""

    def __init__(self, url: str):
        """
        Open a store.

        Args:
            url: fsspec URL (e.g., 'file:///path', 'memory://run', or a plain local path).
        """
        self.url = url
        self.fs, self.root = fsspec.core.url_to_fs(url)

        if not self.root.endswith("/"):
            self.root = self.root + "/"
        self.written: list[str] = []

    def path(self, name: str) -> str:
        return self.root + name

    def write_text(self, name: str, text: str) -> str:
        """Write one artifact, creating parent directories as needed."""
        target = self.path(name)
        parent = target.rsplit("/", 1)[0]
        self.fs.makedirs(parent, exist_ok=True)
        with self.fs.open(target, "w") as f:
            f.write(text)
        self.written.append(name)
        logger.debug("wrote artifact %s", target)
        return target

    def write_series(self, name: str, series: "CorrelationSeries") -> str:
        return self.write_text(name, series.to_csv())

    def write_table(self, name: str, frame: pd.DataFrame, source: str, params: Mapping[str, Any]) -> str:
        return self.write_text(name, render_csv(frame, source, params))

    def write_json(self, name: str, payload: Mapping[str, Any]) -> str:
        return self.write_text(name, json.dumps(json_ready(payload), indent=2, sort_keys=False) + "\n")

    def write_manifest(self, command: str, params: Mapping[str, Any]) -> str:
        """Record the command, its parameters and every artifact written so far."""
        from jja_bath import __version__

        manifest = {
            "command": command,
            "version": __version__,
            "units": "hbar=k_B=e=1",
            "params": dict(params),
            "artifacts": list(self.written),
        }
        return self.write_json(MANIFEST_NAME, manifest)

    def read_text(self, name: str) -> str:
        """
        Read an artifact back.

        Raises:
            FileNotFoundError: If the artifact does not exist.
        """
        target = self.path(name)
        if not self.fs.exists(target):
            raise FileNotFoundError(f"Artifact {name} not found under {self.url}")
        with self.fs.open(target, "r") as f:
            return f.read()

    def read_json(self, name: str) -> Any:
        return json.loads(self.read_text(name))

    def exists(self, name: str) -> bool:
        return self.fs.exists(self.path(name))

    def list_artifacts(self) -> list[str]:
        """All artifact names below the root, sorted."""
        if not self.fs.exists(self.root):
            return []
        names = []
        prefix = self.root.lstrip("/")
        for item in self.fs.find(self.root):
            relative = item.lstrip("/")
            if relative.startswith(prefix):
                relative = relative[len(prefix):]
            names.append(relative)
        return sorted(names)
